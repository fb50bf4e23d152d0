import contextlib
import io
import os
import subprocess
import sys

import pytest

from cli_cases import CASES
from gems import Q4, S3
from rigidgem import read_gem
from rigidgem.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stderr(err):
        rc = main(argv, out)
    return rc, out.getvalue() + err.getvalue()


@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code, monkeypatch):
    monkeypatch.chdir(DATA)
    rc, text = run(argv)
    assert rc == code
    with open(os.path.join("golden", f"{name}.out"), encoding="utf-8") as fh:
        assert text == fh.read()
    assert run(argv) == (rc, text)


def test_usage_errors():
    assert run([])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["switch", "x.gem", "1"])[0] == 2


def test_outputs(tmp_path, monkeypatch):
    monkeypatch.chdir(DATA)
    gem = tmp_path / "out.gem"
    report = tmp_path / "report.txt"
    rc, _ = run(["reduce", "q4.gem", "-o", str(gem), "--report", str(report)])
    assert rc == 0
    assert read_gem(gem) == S3
    assert report.read_text().startswith("p0 4\np1 2\nhandle_flag 0\n")
    rc, text = run(["switch", "q4.gem", "1", "0", "3", "0", "-o", str(gem)])
    assert rc == 0 and "UW_VZ" in text
    assert read_gem(gem).matching(0) == [(1, 3), (2, 4)]
    cat = tmp_path / "c.cat"
    rc, text = run(["enumerate", "--dim", "3", "--max-order", "2", "-o", str(cat)])
    assert rc == 0 and cat.read_text().startswith("dim 3 max_order 2 count 1")
    assert read_gem(os.path.join(DATA, "q4.gem")) == Q4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rigidgem", "reduce", os.path.join(DATA, "q4.gem")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("p: 4 → 2, rigid, trace:")
