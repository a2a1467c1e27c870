import sys

from hibi.cli import main

sys.exit(main())
