import java.io.IOException;

public class Loader {
    /**
     * Загружает файл с диска.
     *
     * @param path путь к файлу
     * @return содержимое файла
     * @throws IOException если файл недоступен
     */
    public String load(String path) throws IOException, InterruptedException {
        Thread.sleep(10);
        return new String(java.nio.file.Files.readAllBytes(java.nio.file.Paths.get(path)));
    }

    /**
     * Сохраняет данные.
     *
     * @param data данные для записи
     * @throws java.io.IOException при ошибке записи
     */
    public void save(byte[] data) throws IOException {
        throw new IOException("не реализовано");
    }
}
