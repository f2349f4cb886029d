import sys

from tricacti.cli import main

sys.exit(main())
