"""
Опорные таблицы V-представлений (значения округлены до 2-3 знаков)

Порядок ячеек X1X2X3: x1x2x3, x1x2x̄3, x1x̄2x3, x1x̄2x̄3, x̄1x2x3, x̄1x2x̄3, x̄1x̄2x3, x̄1x̄2x̄3.
"""

# Допуск сравнения округленных таблиц
TOLERANCE = "0.005"

# compose(M1, M2) для второго примера, область X1X2X3
COMPOSE_FORWARD_EX2 = [
    ("0", "0.15", "0", "0.35", "0", "0.15", "0", "0.35"),
    ("0", "0.075", "0", "0.3", "0", "0.225", "0", "0.4"),
    ("0.05", "0.025", "0.171", "0.129", "0.15", "0.075", "0.229", "0.171"),
    ("0", "0.15", "0", "0.6", "0", "0.15", "0", "0.1"),
    ("0.1", "0.05", "0.343", "0.257", "0.1", "0.05", "0.057", "0.043"),
    ("0", "0.225", "0", "0.65", "0", "0.075", "0", "0.05"),
    ("0.15", "0.075", "0.371", "0.279", "0.05", "0.025", "0.029", "0.021"),
    ("0.125", "0.125", "0.125", "0.125", "0.125", "0.125", "0.125", "0.125"),
    ("0.25", "0", "0.25", "0", "0.25", "0", "0.25", "0"),
    ("0.012", "0.012", "0.05", "0.05", "0.238", "0.238", "0.2", "0.2"),
    ("0.025", "0", "0.1", "0", "0.475", "0", "0.4", "0"),
    ("0.025", "0.025", "0.1", "0.1", "0.225", "0.225", "0.15", "0.15"),
    ("0.05", "0", "0.2", "0", "0.45", "0", "0.3", "0"),
    ("0.138", "0.138", "0.175", "0.175", "0.113", "0.113", "0.075", "0.075"),
    ("0.275", "0", "0.35", "0", "0.225", "0", "0.15", "0"),
    ("0", "0.2", "0", "0.8", "0", "0", "0", "0"),
    ("0.133", "0.067", "0.457", "0.343", "0", "0", "0", "0"),
    ("0", "0.1", "0", "0.4", "0", "0.1", "0", "0.4"),
    ("0.067", "0.033", "0.229", "0.171", "0.067", "0.033", "0.229", "0.171"),
    ("0.3", "0", "0.2", "0", "0.3", "0", "0.2", "0"),
    ("0.15", "0.15", "0.1", "0.1", "0.15", "0.15", "0.1", "0.1"),
    ("0", "0", "0", "0", "0.6", "0", "0.4", "0"),
    ("0", "0", "0", "0", "0.3", "0.3", "0.2", "0.2"),
]

# compose(M2, M1) для второго примера, переупорядочено в X1X2X3
COMPOSE_REVERSE_EX2 = [
    ("0", "0.15", "0", "0.35", "0", "0.15", "0", "0.35"),
    ("0", "0.075", "0", "0.3", "0", "0.225", "0", "0.4"),
    ("0", "0.15", "0", "0.6", "0", "0.15", "0", "0.1"),
    ("0", "0.225", "0", "0.65", "0", "0.075", "0", "0.05"),
    ("0.1", "0.05", "0.2", "0.15", "0.1", "0.05", "0.2", "0.15"),
    ("0.05", "0.025", "0.171", "0.129", "0.15", "0.075", "0.229", "0.171"),
    ("0.1", "0.05", "0.343", "0.257", "0.1", "0.05", "0.057", "0.043"),
    ("0.15", "0.075", "0.371", "0.279", "0.05", "0.025", "0.029", "0.021"),
    ("0.125", "0.125", "0.125", "0.125", "0.125", "0.125", "0.125", "0.125"),
    ("0.012", "0.012", "0.05", "0.05", "0.238", "0.238", "0.2", "0.2"),
    ("0.025", "0.025", "0.1", "0.1", "0.225", "0.225", "0.15", "0.15"),
    ("0.138", "0.138", "0.175", "0.175", "0.113", "0.113", "0.075", "0.075"),
    ("0.25", "0", "0.25", "0", "0.25", "0", "0.25", "0"),
    ("0.025", "0", "0.1", "0", "0.475", "0", "0.4", "0"),
    ("0.05", "0", "0.2", "0", "0.45", "0", "0.3", "0"),
    ("0.275", "0", "0.35", "0", "0.225", "0", "0.15", "0"),
]

# compose(M2, M1) на X1X2
REVERSE_MARGINAL_X1X2 = [
    ("0.15", "0.35", "0.15", "0.35"),
    ("0.075", "0.3", "0.225", "0.4"),
    ("0.15", "0.6", "0.15", "0.1"),
    ("0.225", "0.65", "0.075", "0.05"),
    ("0.25", "0.25", "0.25", "0.25"),
    ("0.025", "0.1", "0.475", "0.4"),
    ("0.05", "0.2", "0.45", "0.3"),
    ("0.275", "0.35", "0.225", "0.15"),
]

# compose(M1, M2) на X2X3
FORWARD_MARGINAL_X2X3 = [
    ("0", "0.3", "0", "0.7"),
    ("0.25", "0.25", "0.25", "0.25"),
    ("0.5", "0", "0.5", "0"),
    ("0", "0.2", "0", "0.8"),
    ("0.133", "0.067", "0.457", "0.343"),
    ("0.6", "0", "0.4", "0"),
    ("0.3", "0.3", "0.2", "0.2"),
]

# Вакуумное расширение равномерного распределения X1X2 на X1X2X3 (точные значения)
VACUOUS_UNIFORM_X1X2X3 = [
    ("0.25", "0", "0", "0.25", "0", "0.25", "0", "0.25"),
    ("0.25", "0", "0", "0.25", "0", "0.25", "0.25", "0"),
    ("0.25", "0", "0", "0.25", "0.25", "0", "0", "0.25"),
    ("0.25", "0", "0", "0.25", "0.25", "0", "0.25", "0"),
    ("0.25", "0", "0.25", "0", "0.25", "0", "0", "0.25"),
    ("0.25", "0", "0.25", "0", "0.25", "0", "0.25", "0"),
    ("0.25", "0", "0.25", "0", "0", "0.25", "0.25", "0"),
    ("0.25", "0", "0.25", "0", "0", "0.25", "0", "0.25"),
    ("0", "0.25", "0.25", "0", "0.25", "0", "0.25", "0"),
    ("0", "0.25", "0.25", "0", "0.25", "0", "0", "0.25"),
    ("0", "0.25", "0.25", "0", "0", "0.25", "0.25", "0"),
    ("0", "0.25", "0.25", "0", "0", "0.25", "0", "0.25"),
    ("0", "0.25", "0", "0.25", "0.25", "0", "0.25", "0"),
    ("0", "0.25", "0", "0.25", "0.25", "0", "0", "0.25"),
    ("0", "0.25", "0", "0.25", "0", "0.25", "0.25", "0"),
    ("0", "0.25", "0", "0.25", "0", "0.25", "0", "0.25"),
]
