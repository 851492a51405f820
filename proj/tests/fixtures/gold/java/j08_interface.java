public interface Storage {
    /**
     * Возвращает число элементов в хранилище.
     *
     * @return количество элементов
     */
    int size();

    /**
     * Удаляет элемент.
     *
     * @param key ключ элемента
     */
    void remove(String key);
}
