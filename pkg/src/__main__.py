"""Allow `python -m src` to run the command-line interface."""

from .cli import main

main()
