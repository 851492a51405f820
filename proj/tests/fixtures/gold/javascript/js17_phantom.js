/**
 * Возвращает квадрат числа.
 * @param {number} x - число
 * @param {boolean} strict - строгий режим
 * @returns {number} квадрат
 */
function square(x) {
  return x * x;
}
