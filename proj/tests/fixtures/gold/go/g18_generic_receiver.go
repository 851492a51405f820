package list

// List хранит элементы типа T.
type List[T any] struct {
	items []T
}

// Len возвращает число элементов списка.
func (l *List[T]) Len() int {
	return len(l.items)
}

// Add добавляет элемент в конец списка.
func (l *List[T]) Add(v T) {
	l.items = append(l.items, v)
}
