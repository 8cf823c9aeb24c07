import sys

from hullembed.cli import main

sys.exit(main())
