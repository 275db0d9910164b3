import sys

from dempoly.cli.main import main

sys.exit(main())
