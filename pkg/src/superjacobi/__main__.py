import sys

from superjacobi.cli import main

sys.exit(main())
