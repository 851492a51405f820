package logx

import "fmt"

// Printf форматирует и печатает сообщение в журнал.
func Printf(format string, args ...interface{}) (n int, err error) {
	return fmt.Printf(format, args...)
}
