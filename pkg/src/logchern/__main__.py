import sys

from logchern.cli import main

sys.exit(main())
