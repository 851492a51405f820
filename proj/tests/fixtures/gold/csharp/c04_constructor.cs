namespace Demo
{
    public class Account
    {
        /// <summary>
        /// Создаёт счёт.
        /// </summary>
        /// <param name="owner">Владелец счёта.</param>
        public Account(string owner)
        {
            Owner = owner;
        }

        /// <summary>Владелец.</summary>
        public string Owner { get; set; }

        /// <summary>Баланс.</summary>
        public decimal Balance
        {
            get { return balance; }
            set { balance = value; }
        }

        private decimal balance;
    }
}
