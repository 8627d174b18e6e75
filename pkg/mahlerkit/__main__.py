import sys

from dotenv import load_dotenv

from mahlerkit.cli import main

if __name__ == "__main__":
    load_dotenv()
    sys.exit(main())
