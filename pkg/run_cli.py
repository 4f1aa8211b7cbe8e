"""
CLI launcher - Run credal_compose from the repository root
"""
import sys
import signal

# Добавляем корневую директорию в path
sys.path.insert(0, '.')


def print_versions():
    """Вывод версий используемых библиотек в stderr"""
    try:
        import cdd
        import numpy
        import pydantic

        print(f"📦 Python: {sys.version.split()[0]}", file=sys.stderr)
        print(f"📦 pycddlib: {getattr(cdd, '__version__', 'unknown')}", file=sys.stderr)
        print(f"📦 numpy: {numpy.__version__}", file=sys.stderr)
        print(f"📦 pydantic: {pydantic.VERSION}", file=sys.stderr)
    except ImportError as e:
        print(f"⚠️  Не удалось определить версии: {e}", file=sys.stderr)


def signal_handler(sig, frame):
    """Обработчик сигнала остановки"""
    print('\n👋 Получен сигнал остановки...', file=sys.stderr)
    sys.exit(130)


if __name__ == "__main__":
    # Регистрируем обработчик сигналов
    signal.signal(signal.SIGINT, signal_handler)
    if hasattr(signal, 'SIGTERM'):
        signal.signal(signal.SIGTERM, signal_handler)

    if "--versions" in sys.argv[1:]:
        print_versions()
        sys.exit(0)

    try:
        from credal_compose.cli.main import main
        sys.exit(main(sys.argv[1:]))

    except KeyboardInterrupt:
        print("\n👋 Остановлено пользователем", file=sys.stderr)
        sys.exit(130)
    except Exception as e:
        print(f"\n❌ Критическая ошибка: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        sys.exit(3)
