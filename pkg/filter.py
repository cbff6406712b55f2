"""Entry point: python filter.py run|synth|verify ..."""
import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
