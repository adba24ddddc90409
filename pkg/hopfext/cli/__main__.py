"""Allow running hopfext.cli as a module: python -m hopfext.cli"""

from hopfext.cli import main

if __name__ == "__main__":
    main()
