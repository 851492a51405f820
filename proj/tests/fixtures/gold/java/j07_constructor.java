public class Point {
    private final double x;
    private final double y;

    /**
     * Создаёт точку на плоскости.
     *
     * @param x координата по горизонтали
     * @param y координата по вертикали
     */
    public Point(double x, double y) {
        this.x = x;
        this.y = y;
    }
}
