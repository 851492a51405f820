namespace Demo
{
    public static class Geometry
    {
        /// <summary>
        /// Вычисляет площадь прямоугольника.
        /// </summary>
        /// <param name="width">Ширина.</param>
        /// <returns>Площадь.</returns>
        public static double Area(double width, double height)
        {
            return width * height;
        }
    }
}
