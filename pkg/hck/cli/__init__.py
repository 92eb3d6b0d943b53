"""The hodge-chow command-line tool."""

from hck.cli.hck_cli import execute, main

__all__ = ["execute", "main"]
