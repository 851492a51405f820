def scale(value, factor):
    """Масштабирует значение.

    Args:
        value (float): исходное значение

    Returns:
        float: результат умножения
    """
    return value * factor
