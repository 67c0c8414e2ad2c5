# coding=utf-8
"""Run the command line interface with ``python -m tukey_fsbp``."""
import sys

from tukey_fsbp.cli import main

sys.exit(main())
