import sys

from WitnessPy.cli import main

sys.exit(main())
