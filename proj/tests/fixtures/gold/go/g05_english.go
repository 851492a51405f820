package parse

import "strconv"

// Parse parses the input string into an integer.
// It returns an error when the input is not a number.
func Parse(s string) (int, error) {
	return strconv.Atoi(s)
}
