package text

const tmpl = `func Fake() {
}`

// Braces считает фигурные скобки в строке.
func Braces(s string) int {
	n := 0
	for _, r := range s {
		if r == '{' || r == '}' {
			n++
		}
	}
	return n + len("}")
}
