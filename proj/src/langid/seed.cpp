#include "seed.hpp"

// Hand-written documentation-style prose used to train the built-in profile.
// One sentence per line.
namespace docsieve::langid_seed {

const char* const kEnglish = R"(Returns the number of elements stored in this collection.
Creates an empty map with the default initial capacity.
Reads all bytes from the input stream and closes it afterwards.
Writes the given text to the output file, replacing any existing content.
Checks if the provided value falls within the allowed range.
Throws an exception when the argument is null or empty.
Parses a date string in the ISO format and returns a timestamp.
Converts the temperature from degrees Celsius to Fahrenheit.
Calculates the total price of all items in the shopping cart.
Gets the name of the current user from the session.
Sets the maximum number of retries for failed requests.
Opens a new connection to the database server using the given settings.
Closes the underlying socket and releases any associated resources.
Sends a message to all subscribers of the channel.
Registers a callback that is invoked when the event fires.
Removes the first occurrence of the specified element from the list.
Adds all of the elements in the given collection to this set.
Returns true if this list contains no elements.
Returns the index of the last matching element, or minus one if there is none.
Builds a query string from the map of parameters.
Loads the settings from the configuration file in the home directory.
Saves the current state so that it can be restored later.
Validates the input and reports every problem that was found.
Formats the amount of money according to the current locale.
Downloads the file from the remote server and stores it on disk.
Uploads the image and returns the public address of the resource.
Waits until all worker threads have finished their jobs.
Starts the timer and schedules the next tick.
Stops the service and flushes pending log records.
Computes the checksum of the buffer using a fast hash function.
Encodes the string as base64 so that it can be sent over the network.
Decodes the token and verifies its signature.
Sorts the records by creation time in descending order.
Filters out the entries that do not match the pattern.
Merges two sorted arrays into a single sorted array.
Splits the path into directory and file name components.
Normalizes whitespace and converts the text to lower case.
Finds the user with the given email address.
Updates the cached value when the underlying data changes.
Deletes expired sessions from the store.
Handles a click on the submit button of the form.
Renders the table with the current page of results.
Moves the selected item one position up.
Resets all fields of the form to their initial values.
Copies the contents of one directory into another.
Creates a thread pool with a fixed number of workers.
Retrieves the list of available products from the catalog.
Returns a new string with the characters in reverse order.
Determines whether the given year is a leap year.
Rounds the value down to the nearest multiple of the step.
Generates a unique identifier for the new order.
Shows an error message to the user and logs the details.
Applies the discount to every item in the order.
Returns the default value if the key is not present in the map.
This function is called once when the module is loaded.
Helper method that wraps the request in a retry loop.
The result is cached for the lifetime of the object.
If the queue is full, the call blocks until space becomes available.
Returns null when no matching record can be found.
Prints a short summary of the test results to the console.
Initializes the logger with the level taken from the environment.
Escapes the characters that have a special meaning in regular expressions.
Converts the list of strings into a comma separated line.
Compares two objects by their identifiers.
Calculates the distance between two points on the map.
Traverses the tree and collects all leaf nodes.
Returns the parent node of the given node, or null for the root.
Inserts a new row into the table and returns its primary key.
Executes the command and captures its output.
Marks the task as completed and notifies the owner.
Returns the width and height of the window in pixels.
Appends a new line to the end of the log file.
Checks that the user has permission to view this page.
Fetches the latest exchange rates from the bank.
Returns an iterator over the keys of this dictionary.
Wraps the value in an immutable container.
Logs in the user with the given name and password.
Schedules the job to run every day at midnight.
Splits the text into words and counts how often each word occurs.
Encrypts the data with the public key of the recipient.)";

const char* const kRussian = R"(Возвращает количество элементов в этой коллекции.
Создаёт пустой словарь с начальной ёмкостью по умолчанию.
Читает все байты из входного потока и затем закрывает его.
Записывает заданный текст в выходной файл, заменяя прежнее содержимое.
Проверяет, попадает ли переданное значение в допустимый диапазон.
Выбрасывает исключение, если аргумент пустой.
Разбирает строку с датой в формате ISO и возвращает отметку времени.
Переводит температуру из градусов Цельсия в градусы Фаренгейта.
Вычисляет общую стоимость всех товаров в корзине.
Получает имя текущего пользователя из сессии.
Задаёт максимальное число повторных попыток для неудачных запросов.
Открывает новое соединение с сервером базы данных с указанными параметрами.
Закрывает сокет и освобождает связанные с ним ресурсы.
Отправляет сообщение всем подписчикам канала.
Регистрирует обработчик, который вызывается при наступлении события.
Удаляет первое вхождение указанного элемента из списка.
Добавляет все элементы заданной коллекции в это множество.
Возвращает истину, если список не содержит элементов.
Возвращает индекс последнего подходящего элемента или минус один.
Строит строку запроса из словаря параметров.
Загружает настройки из конфигурационного файла в домашнем каталоге.
Сохраняет текущее состояние, чтобы его можно было восстановить позже.
Проверяет входные данные и сообщает обо всех найденных ошибках.
Форматирует денежную сумму в соответствии с текущей локалью.
Скачивает файл с удалённого сервера и сохраняет его на диск.
Загружает изображение и возвращает публичный адрес ресурса.
Ожидает, пока все рабочие потоки закончат свою работу.
Запускает таймер и планирует следующий шаг.
Останавливает службу и сбрасывает накопленные записи журнала.
Вычисляет контрольную сумму буфера с помощью быстрой хеш функции.
Кодирует строку в base64, чтобы её можно было передать по сети.
Декодирует токен и проверяет его подпись.
Сортирует записи по времени создания в порядке убывания.
Отбрасывает записи, которые не соответствуют шаблону.
Объединяет два отсортированных массива в один.
Разделяет путь на каталог и имя файла.
Нормализует пробелы и переводит текст в нижний регистр.
Находит пользователя с указанным адресом электронной почты.
Обновляет закешированное значение при изменении исходных данных.
Удаляет просроченные сессии из хранилища.
Обрабатывает нажатие на кнопку отправки формы.
Отрисовывает таблицу с текущей страницей результатов.
Перемещает выбранный элемент на одну позицию вверх.
Сбрасывает все поля формы к начальным значениям.
Копирует содержимое одного каталога в другой.
Создаёт пул потоков с фиксированным числом исполнителей.
Получает список доступных товаров из каталога.
Возвращает новую строку с символами в обратном порядке.
Определяет, является ли год високосным.
Округляет значение вниз до ближайшего кратного шагу.
Генерирует уникальный идентификатор для нового заказа.
Показывает пользователю сообщение об ошибке и пишет подробности в журнал.
Применяет скидку к каждой позиции заказа.
Возвращает значение по умолчанию, если ключа нет в словаре.
Эта функция вызывается один раз при загрузке модуля.
Вспомогательный метод, который повторяет запрос в цикле.
Результат кешируется на всё время жизни объекта.
Если очередь заполнена, вызов блокируется до появления места.
Возвращает пустое значение, если запись не найдена.
Печатает краткую сводку результатов тестов в консоль.
Инициализирует журнал с уровнем из переменной окружения.
Экранирует символы, имеющие особое значение в регулярных выражениях.
Преобразует список строк в одну строку через запятую.
Сравнивает два объекта по их идентификаторам.
Вычисляет расстояние между двумя точками на карте.
Обходит дерево и собирает все листья.
Возвращает родительский узел заданного узла или пустое значение для корня.
Вставляет новую строку в таблицу и возвращает её первичный ключ.
Выполняет команду и перехватывает её вывод.
Отмечает задачу как выполненную и уведомляет владельца.
Возвращает ширину и высоту окна в пикселях.
Дописывает новую строку в конец файла журнала.
Проверяет, что у пользователя есть права на просмотр этой страницы.
Получает свежие курсы валют от банка.
Возвращает итератор по ключам этого словаря.
Оборачивает значение в неизменяемый контейнер.
Выполняет вход пользователя с указанными именем и паролем.
Планирует запуск задания каждый день в полночь.
Разбивает текст на слова и подсчитывает, сколько раз встречается каждое слово.
Шифрует данные открытым ключом получателя.)";

}  // namespace docsieve::langid_seed
