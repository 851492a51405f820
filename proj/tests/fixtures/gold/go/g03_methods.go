package stack

// Stack хранит целые числа.
type Stack struct {
	items []int
}

// Push добавляет элемент на вершину стека.
func (s *Stack) Push(v int) {
	s.items = append(s.items, v)
}

// Pop снимает элемент с вершины стека и сообщает, был ли он.
func (s *Stack) Pop() (int, bool) {
	if len(s.items) == 0 {
		return 0, false
	}
	v := s.items[len(s.items)-1]
	s.items = s.items[:len(s.items)-1]
	return v, true
}
