package old

/* Legacy устаревшая функция. */
func Legacy() {
}

// Deprecated: используйте New.
func Old() {
}
