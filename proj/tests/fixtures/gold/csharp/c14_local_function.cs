namespace Demo
{
    public class Fib
    {
        /// <summary>
        /// Вычисляет число Фибоначчи.
        /// </summary>
        /// <param name="n">Номер числа.</param>
        /// <returns>Число Фибоначчи.</returns>
        public long Compute(int n)
        {
            long Inner(int k)
            {
                return k < 2 ? k : Inner(k - 1) + Inner(k - 2);
            }

            return Inner(n);
        }
    }
}
