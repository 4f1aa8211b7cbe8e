"""
credal_compose - композиция кредальных множеств в точной рациональной арифметике
"""
__version__ = "0.1.0"
