package mathx

// Sum возвращает сумму двух чисел.
func Sum(a, b int) int {
	return a + b
}
