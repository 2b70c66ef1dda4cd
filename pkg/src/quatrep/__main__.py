import sys

from quatrep.cli import main

sys.exit(main())
