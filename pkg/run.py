"""
Quick start script for spinqpt.
Passes its arguments to the CLI (e.g. `python run.py preset fig2a`); with none it runs the self-check.
"""

import sys

from src.main import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:] or ["check"]))
