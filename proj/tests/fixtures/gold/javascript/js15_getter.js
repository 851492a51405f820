class Box {
  constructor() {
    this.n = 0;
  }

  /**
   * Размер коробки.
   * @returns {number} текущий размер
   */
  get size() {
    return this.n;
  }
}
