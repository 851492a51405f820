package io2

type File struct{}

// Close
func (f *File) Close() error {
	return nil
}
