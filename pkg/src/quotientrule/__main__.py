import sys

from quotientrule.cli import main

sys.exit(main())
