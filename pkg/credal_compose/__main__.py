"""
Запуск CLI через python -m credal_compose
"""
import sys

from credal_compose.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
