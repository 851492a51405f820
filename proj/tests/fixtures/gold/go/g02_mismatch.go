package mathx

// возвращает разность двух чисел
func Sub(a, b int) int {
	return a - b
}
