using System.Threading.Tasks;

namespace Demo
{
    public class Worker
    {
        /// <summary>
        /// Выполняет работу асинхронно.
        /// </summary>
        /// <param name="delay">Задержка в миллисекундах.</param>
        public async Task RunAsync(int delay)
        {
            await Task.Delay(delay);
        }

        /// <summary>
        /// Вычисляет значение асинхронно.
        /// </summary>
        /// <param name="x">Аргумент.</param>
        /// <returns>Удвоенное значение.</returns>
        public async Task<int> ComputeAsync(int x)
        {
            await Task.Delay(1);
            return x * 2;
        }
    }
}
