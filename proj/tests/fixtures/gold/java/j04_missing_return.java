public class Strings {
    /**
     * Возвращает длину строки без пробелов.
     *
     * @param s исходная строка
     */
    public static int trimmedLength(String s) {
        return s.trim().length();
    }

    /**
     * Повторяет строку.
     *
     * @param s строка
     * @param n число повторов
     * @return
     */
    public static String repeat(String s, int n) {
        return s.repeat(n);
    }
}
