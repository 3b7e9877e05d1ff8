import sys

from quatadic.cli import main

sys.exit(main())
