import sys

from rbpbo.cli import main

sys.exit(main())
