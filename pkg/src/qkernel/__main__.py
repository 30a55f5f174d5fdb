"""Allow `python -m qkernel ...`."""

from .cli import console_main

console_main()
