public class Ranges {
    /**
     * Проверяет попадание в диапазон.
     *
     * @param value проверяемое значение
     * @param low
     * @param high верхняя граница
     * @return истина, если значение в диапазоне
     */
    public boolean inRange(int value, int low, int high) {
        return value >= low && value <= high;
    }
}
