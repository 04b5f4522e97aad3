import sys

from kangle.cli import main

sys.exit(main())
