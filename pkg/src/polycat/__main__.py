import sys

from polycat.cli import main

sys.exit(main())
