def upper(s):
    '''Переводит строку в верхний регистр.'''
    return s.upper()


def lower(s: str) -> str:
    r"""Переводит строку в нижний регистр.

    Args:
        s (str): исходная строка

    Returns:
        str: строка в нижнем регистре
    """
    return s.lower()
