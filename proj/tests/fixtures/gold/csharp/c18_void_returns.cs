namespace Demo
{
    public class Buffer
    {
        /// <summary>
        /// Сбрасывает буфер.
        /// </summary>
        /// <returns>Ничего.</returns>
        public void Reset()
        {
            size = 0;
        }

        private int size;
    }
}
