import pytest

from gems import B4, Q4, S3
from rigidgem import MoveTrace, SwitchVariant, parse_trace, verify_trace
from rigidgem.errors import TraceFormatError
from rigidgem.trace import Add, Blob, Cancel, Switch, format_trace, read_trace

TEXT = """\
# a comment
blob 1 0
add 0,1 2:3 3:1
cancel 5 6   # trailing
switch 1 0 3 0 UW_VZ
"""


def test_parse_and_format():
    t = parse_trace(TEXT)
    assert t.steps == [
        Blob(1, 0),
        Add((0, 1), ((2, 3), (3, 1))),
        Cancel(5, 6),
        Switch(1, 0, 3, 0, SwitchVariant.UW_VZ),
    ]
    assert format_trace(t) == "blob 1 0\nadd 0,1 2:3 3:1\ncancel 5 6\nswitch 1 0 3 0 UW_VZ\n"
    assert parse_trace(str(t)).steps == t.steps


@pytest.mark.parametrize("text,line", [
    ("cancel 1\n", 1),
    ("\nfrobnicate 1 2\n", 2),
    ("cancel a b\n", 1),
    ("switch 1 0 3 0 SIDEWAYS\n", 1),
    ("add 0,1 2-3\n", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(TraceFormatError) as info:
        parse_trace(text)
    assert info.value.line == line


def test_q4_cancel():
    assert verify_trace(Q4, parse_trace("cancel 1 2"), S3)


def test_blob_and_back():
    assert verify_trace(S3, parse_trace("blob 1 0\ncancel 3 4"), S3)


def test_failure_step():
    res = verify_trace(S3, parse_trace("cancel 1 2"), S3)
    assert not res and res.step == 1


def test_wrong_target():
    res = verify_trace(Q4, parse_trace("cancel 1 2"), Q4)
    assert not res and res.step == 0


def test_switch_needs_preferred_rho_n1():
    assert verify_trace(Q4, parse_trace("switch 1 0 3 0 UW_VZ\ncancel 1 2"), S3)
    res = verify_trace(Q4, parse_trace("switch 1 0 3 0 UZ_VW"), Q4)
    assert not res and res.step == 1 and "preferred" in res.reason
    res = verify_trace(B4, parse_trace("switch 1 0 2 0 UW_VZ"), B4)
    assert not res and res.step == 1


def test_out_of_range_steps():
    for text in ("cancel 1 9", "blob 9 0", "switch 1 0 9 0 UW_VZ", "add 0 1:1 2:1 3:9"):
        assert verify_trace(S3, parse_trace(text), S3).step == 1


def test_read_trace(tmp_path):
    path = tmp_path / "t.trace"
    path.write_text(TEXT)
    assert len(read_trace(path)) == 4
    assert isinstance(read_trace(path), MoveTrace)
