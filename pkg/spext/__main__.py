"""python -m spext"""
import sys

from .cli import main

sys.exit(main())
