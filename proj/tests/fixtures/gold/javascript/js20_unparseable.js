/**
 * Отправляет сообщение.
 * @param {string}
 */
function send(msg) {
  console.log(msg);
}
