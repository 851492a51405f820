public class Broken {
    /**
     * Читает конфигурацию.
     *
     * @param file файл конфигурации
     * @throws
     */
    public void read(String file) throws java.io.IOException {
        java.nio.file.Files.readAllLines(java.nio.file.Paths.get(file));
    }

    /**
     * Пишет конфигурацию.
     *
     * @param
     */
    public void write(String file) {
        System.out.println(file);
    }
}
