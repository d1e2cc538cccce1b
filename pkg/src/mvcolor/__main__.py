"""Main module entry point for mvcolor."""

from mvcolor.cli import main

if __name__ == "__main__":
    main()
