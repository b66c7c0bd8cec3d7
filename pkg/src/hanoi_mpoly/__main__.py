import sys

from hanoi_mpoly.cli import main

sys.exit(main())
