import sys

from rmtlab.cli import main

sys.exit(main())
