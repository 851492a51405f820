package cb

// handler не является именованной функцией.
var handler = func(x int) int {
	return x
}

// Run запускает обработчики.
func Run(xs []int) {
	f := func(v int) {
		_ = handler(v)
	}
	for _, x := range xs {
		f(x)
	}
}
