"""
Main CLI file - Entry point for credal_compose

Коды выхода: 0 - успех или true, 1 - false, 2 - ошибка использования, 3 - ошибка данных.
"""
import argparse
import logging
import sys
from typing import List, Optional

from credal_compose import __version__
from credal_compose.cli.commands import register_commands
from credal_compose.config.settings import settings
from credal_compose.core.exceptions import CredalError
from credal_compose.services.polytope_service import conversion_cache

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_DATA = 3


class UsageError(Exception):
    """Неверные аргументы командной строки"""


class _Parser(argparse.ArgumentParser):
    """argparse без sys.exit: ошибки превращаются в UsageError"""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="credal_compose",
        description="Exact composition of credal sets",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)
    register_commands(subparsers)
    return parser


def setup_logging():
    """Настройка логирования; вывод только в stderr или файл"""
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        filename=settings.LOG_FILE if settings.LOG_FILE else None
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main function"""
    setup_logging()
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
    except UsageError as e:
        print(f"ERROR USAGE: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"Running command: {args.command}")
    try:
        return args.handler(args)
    except CredalError as e:
        logger.info(f"{args.command} failed: {e}")
        print(f"ERROR {e.code}: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"ERROR IO: {e}", file=sys.stderr)
        return EXIT_DATA
    except Exception as e:
        logger.error(f"Error in {args.command}: {e}", exc_info=True)
        print(f"ERROR INTERNAL: {e}", file=sys.stderr)
        return EXIT_DATA
    finally:
        logger.debug(f"Conversion cache: {conversion_cache.get_stats()}")


if __name__ == "__main__":
    sys.exit(main())
