#!python
# coding: utf-8

"""
python -m alexgeo
"""

import sys
from .cli import main

sys.exit(main())
