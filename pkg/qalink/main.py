# qalink/main.py
import sys

from .adapters.entry.cli.cli_runner import run


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
