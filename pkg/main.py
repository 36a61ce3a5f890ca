#!/usr/bin/env python3
"""
cornerforge - Main Entry Point

Construct, count, enumerate and verify corner-free sets from a checkout:

    python main.py construct --q 2 --d 5
"""

import sys

from cornerforge.cli import main


if __name__ == "__main__":
    sys.exit(main())
