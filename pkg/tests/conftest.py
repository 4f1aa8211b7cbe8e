"""
Общие фикстуры тестов
"""
import sys
from pathlib import Path

import pytest
from hypothesis import settings as hypothesis_settings

# Добавляем корневую директорию в path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from helpers import load_fixture  # noqa: E402

hypothesis_settings.register_profile("credal", deadline=None, print_blob=True)
hypothesis_settings.load_profile("credal")


@pytest.fixture
def ex1():
    return load_fixture("ex1_m1.json"), load_fixture("ex1_m2.json")


@pytest.fixture
def ex2():
    return load_fixture("ex2_m1.json"), load_fixture("ex2_m2.json")


@pytest.fixture
def ex3():
    return load_fixture("ex3_m1.json"), load_fixture("ex3_m2.json")
