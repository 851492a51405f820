public class Phantom {
    /**
     * Вычисляет модуль числа.
     *
     * @param x число
     * @param precision точность вычислений
     * @return модуль
     */
    public double abs(double x) {
        return x < 0 ? -x : x;
    }
}
