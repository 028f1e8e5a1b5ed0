import pytest

from semirep.catalog import builtin
from semirep.errors import AssociativityError, ParseError, ZeroAxiomError
from semirep.sgt import dump_sgt, load_sgt, parse_sgt

CHAIN3 = """\
# the 3-element chain, 1 is the bottom
n 3
1 1 1
1 2 2

1 2 3
zero 1
involution 1 2 3
"""


def test_parse_with_comments_and_blank_lines():
    src = parse_sgt(CHAIN3)
    assert src.table.n == 3 and src.table.zero == 0
    assert src.table.mul[1][2] == 1
    assert src.involution == (0, 1, 2)


def test_optional_lines_absent():
    src = parse_sgt("n 1\n1\n")
    assert src.table.zero is None and src.involution is None


@pytest.mark.parametrize("name", ["b2", "i2", "t2", "l2", "null2", "s3"])
def test_round_trip(name, tmp_path):
    S = builtin(name)
    text = dump_sgt(S, tuple(S.elements))
    path = tmp_path / f"{name}.sgt"
    path.write_text(text)
    src = load_sgt(path)
    assert src.table.mul == S.mul and src.table.zero == S.zero
    assert dump_sgt(src.table, src.involution) == text


@pytest.mark.parametrize("text, line, match", [
    ("", None, "empty"),
    ("size 2\n", 1, "first line"),
    ("n x\n", 1, "element count"),
    ("n 0\n", 1, "at least one"),
    ("n 2\n1 1\n", None, "expected 2 table rows"),
    ("n 2\n1 1\n1\n", 3, "expected 2"),
    ("n 2\n1 1\n1 3\n", 3, "outside"),
    ("n 2\n1 a\n1 1\n", 2, "not an integer"),
    ("n 2\n1 1\n1 1\nzero 1 2\n", 4, "zero"),
    ("n 2\n1 1\n1 1\ninvolution 1\n", 4, "involution"),
    ("n 2\n1 1\n1 1\nzero 1\nzero 1\n", 5, "unexpected"),
    ("n 2\n1 1\n1 1\nfoo\n", 4, "unexpected"),
])
def test_parse_errors(text, line, match):
    with pytest.raises(ParseError, match=match) as err:
        parse_sgt(text)
    assert err.value.line == line


def test_table_errors_propagate():
    with pytest.raises(AssociativityError):
        parse_sgt("n 2\n2 2\n1 1\n")
    with pytest.raises(ZeroAxiomError):
        parse_sgt("n 2\n1 1\n2 2\nzero 1\n")
