import asyncio


@decorator
@another(option=True)
async def fetch(url: str, timeout: float = 1.0) -> bytes:
    """Загружает данные по адресу.

    Args:
        url (str): адрес ресурса
        timeout (float): время ожидания в секундах

    Returns:
        bytes: содержимое ответа
    """
    await asyncio.sleep(timeout)
    return b""
