import sys

from lambda_bundle.cli import main

sys.exit(main())
