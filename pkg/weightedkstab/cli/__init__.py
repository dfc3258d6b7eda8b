from weightedkstab.cli.main import cli

__all__ = [
    "cli",
]
