/**
 * Инициализирует приложение и подключает обработчики событий.
 */
function init() {
  document.addEventListener('click', onClick);
}

/** Обработчик нажатия. */
function onClick(event) {
  console.log(event);
}
