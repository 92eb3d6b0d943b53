import io
import json

import pytest

from hck.cli import execute
from hck.toric import hirzebruch_fan, product_fan, projective_space_fan

"""
Fans used throughout the toric tests, plus a runner that drives the command line
in-process and captures both streams.
"""


@pytest.fixture
def p2_fan():
    return projective_space_fan(2)


@pytest.fixture
def p1xp1_fan():
    p1 = projective_space_fan(1)
    return product_fan(p1, p1)


@pytest.fixture
def hirzebruch_2_fan():
    return hirzebruch_fan(2)


@pytest.fixture
def sample_fans():
    p1 = projective_space_fan(1)
    return [
        p1,
        projective_space_fan(2),
        projective_space_fan(3),
        product_fan(p1, p1),
        product_fan(p1, projective_space_fan(2)),
        product_fan(product_fan(p1, p1), p1),
        hirzebruch_fan(1),
        hirzebruch_fan(3),
    ]


@pytest.fixture
def write_fan(tmp_path):
    def _write(fan, name="fan.json"):
        path = tmp_path / name
        path.write_text(json.dumps(fan.to_document()))
        return str(path)

    return _write


class CliResult:
    def __init__(self, code, out, err):
        self.code = code
        self.out = out
        self.err = err


@pytest.fixture
def run_cli():
    def _run(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = execute(list(argv), out, err)
        return CliResult(code, out.getvalue(), err.getvalue())

    return _run
