package multi

func helper() {}

// Compute выполняет вычисление.
//
// Результат кэшируется между вызовами.
func Compute(x float64) float64 {
	helper()
	return x * 2
}

// комментарий к переменной
var counter int

func Increment() {
	counter++
}
