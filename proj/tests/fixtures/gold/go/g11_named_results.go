package mathx

// DivMod возвращает частное и остаток от деления.
func DivMod(a, b int) (q, r int) {
	q = a / b
	r = a % b
	return
}
