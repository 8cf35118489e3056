import sys

from queensgraph.cli import main

sys.exit(main())
