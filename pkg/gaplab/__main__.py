"""``python -m gaplab``: same as the ``gaplab`` console script."""
import sys

from gaplab.bin.main import main

if __name__ == "__main__":
    sys.exit(main())
