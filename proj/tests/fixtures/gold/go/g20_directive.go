package hash

// Fast быстро вычисляет хэш строки.
//go:noinline
func Fast(s string) uint32 {
	var h uint32
	for i := 0; i < len(s); i++ {
		h = h*31 + uint32(s[i])
	}
	return h
}
