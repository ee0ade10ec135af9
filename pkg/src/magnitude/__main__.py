"""Allow `python -m magnitude ...`."""

from .cli import main

if __name__ == "__main__":
    main()
