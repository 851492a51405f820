import re


def split_sentences(text: str, min_words: int) -> list:
    """Разбивает текст на предложения и отбрасывает слишком короткие.

    Границей предложения считается точка, вопросительный или восклицательный
    знак, за которым следует пробел. Пустые фрагменты пропускаются.

    Args:
        text (str): Исходный текст на любом языке.
        min_words (int): Минимальное число слов в предложении.

    Returns:
        list: Предложения в порядке их появления в тексте.

    Raises:
        ValueError: Если минимальное число слов отрицательное.
    """
    if min_words < 0:
        raise ValueError("min_words must be non-negative")
    parts = re.split(r"(?<=[.!?])\s+", text.strip())
    result = []
    for part in parts:
        if part and len(part.split()) >= min_words:
            result.append(part)
    return result


def count_words(text, ignore_case=False):
    """Подсчитывает, сколько раз встречается каждое слово в тексте.

    Args:
        text: Исходный текст.

    Returns:
        dict: Словарь частот.
    """
    counts = {}
    for word in text.split():
        key = word.lower() if ignore_case else word
        counts[key] = counts.get(key, 0) + 1
    return counts
