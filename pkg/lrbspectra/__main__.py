import sys

from lrbspectra.main import main

sys.exit(main())
