package seq

type Seq []int

// Len: возвращает длину последовательности.
func (s Seq) Len() int {
	return len(s)
}
