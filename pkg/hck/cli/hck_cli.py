"""
Command-line frontend of the Hodge-Chow Kit.

Results go to stdout in the format chosen with --format; diagnostics (only
with --verbose) and errors go to stderr. Exit status is 0 on success, 1 on a
domain error and 2 on a usage error.
"""

import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Optional, Sequence, TextIO

from hck.cli.cli_params import CliParams
from hck.cli.commands import COMMANDS
from hck.cli.render import render
from hck.utils.eprint import disable_eprint, enable_eprint, eprint
from hck.utils.errors import HckError


def execute(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """
    Run one invocation of the tool.

    Args:
        argv: Arguments after the program name; defaults to sys.argv.
        out: Stream for the result document; defaults to stdout.
        err: Stream for errors and diagnostics; defaults to stderr.

    Returns:
        The exit status.
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr

    with redirect_stdout(out), redirect_stderr(err):
        try:
            params = CliParams(argv)
        except SystemExit as e:
            if e.code is None:
                return 0
            return e.code if isinstance(e.code, int) else 2

        if params.verbose:
            enable_eprint()
            eprint("eprint enabled")
        else:
            disable_eprint()

        try:
            document = COMMANDS[params.verb](params.args)
        except HckError as e:
            print(f"hodge-chow {params.verb}: error: {e}", file=err)
            return 1

        out.write(render(document, params.format))
        return 0


def main() -> None:
    """Run the tool with the process arguments and exit with its status."""
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
