'use strict';

/**
 * Складывает два числа.
 *
 * @param {number} a - первое слагаемое
 * @param {number} b - второе слагаемое
 * @returns {number} сумма чисел
 */
function add(a, b) {
  return a + b;
}
