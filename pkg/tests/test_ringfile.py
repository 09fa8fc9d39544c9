import pytest

from redlab.errors import InputFormatError
from redlab.groebner import ideal_equal
from redlab.ringfile import load_ring_file, parse_ring_file

TEXT = """\
# a comment
[ring] char=3 vars=x,y,z defining=z^2-x*y equidimensional=true

[ideal I] gens=x; y ; z   # trailing comment
[ideal J] gens=x+y
"""


def test_parse_round_trip():
    rf = parse_ring_file(TEXT)
    assert rf.ring.char == 3 and rf.ring.vars == ("x", "y", "z")
    assert rf.ring.equidimensional
    assert ideal_equal(rf.ideal("I"), rf.ring.maximal)
    assert len(rf.ideal("J").gens) == 1


def test_shipped_files_load(tmp_path):
    from pathlib import Path

    data = Path(__file__).parent.parent / "test-data"
    for name in ("ex42.ring", "ex56.ring"):
        rf = load_ring_file(data / name)
        assert rf.ideals


@pytest.mark.parametrize("text, line, column", [
    ("[ring] char=2 vars=x,y\n[ideal I] gens=x+*y", 2, 18),
    ("[ring] char=two vars=x", 1, 13),
    ("[ring] char=2\n", 1, 7),
    ("[ideal I] gens=x", 1, 1),
    ("[ring] char=2 vars=x\n[ideal I] gens=x\n[ideal I] gens=x", 3, 8),
    ("[ring] char=2 vars=x\nwhat", 2, 1),
    ("[ring] char=2 vars=x equidimensional=maybe", 1, 38),
    ("[ring] char=2 vars=x junk char=2", 1, 27),
])
def test_errors_carry_position(text, line, column):
    with pytest.raises(InputFormatError) as info:
        parse_ring_file(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_unknown_ideal_name():
    rf = parse_ring_file("[ring] char=2 vars=x\n[ideal I] gens=x")
    with pytest.raises(InputFormatError):
        rf.ideal("K")


def test_empty_file():
    with pytest.raises(InputFormatError):
        parse_ring_file("# nothing\n")
