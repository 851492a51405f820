package client

type Client struct{}

// New создаёт клиента с настройками по умолчанию.
func New() *Client {
	return &Client{}
}

// Empty возвращает пустую структуру.
func Empty() struct{} {
	return struct{}{}
}

// Any возвращает значение произвольного типа.
func Any() interface{} {
	return nil
}
