package stats

import "sort"

// Median возвращает медиану выборки. Срез не изменяется: значения копируются
// и сортируются по возрастанию. Для выборки чётной длины результатом служит
// среднее двух центральных элементов, для нечётной длины берётся центральный
// элемент. Пустая выборка даёт ноль, чтобы вызывающему коду не приходилось
// отдельно проверять этот случай перед каждым обращением к функции.
func Median(values []float64) float64 {
	if len(values) == 0 {
		return 0
	}
	sorted := make([]float64, len(values))
	copy(sorted, values)
	sort.Float64s(sorted)
	mid := len(sorted) / 2
	if len(sorted)%2 == 0 {
		return (sorted[mid-1] + sorted[mid]) / 2
	}
	return sorted[mid]
}
