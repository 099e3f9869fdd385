from lkg0.cli import main
import sys

sys.exit(main())
