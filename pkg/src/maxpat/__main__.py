"""Allow ``python -m maxpat`` alongside the ``maxpat`` console script."""

import sys

from .cli import main

sys.exit(main())
