package web

import "net/http"

// Handle обрабатывает запрос без использования параметров.
func Handle(http.ResponseWriter, *http.Request) {
}
