import sys

from metallic_cubes.cli import main

if __name__ == '__main__':
    sys.exit(main())
