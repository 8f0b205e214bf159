import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakschur import (
    IntSet,
    InvalidPartitionError,
    Partition,
    WspFormatError,
    base_partition,
    iterate,
    parse_partition,
    serialize_partition,
    well_formed_violations,
)

from conftest import BASE_TEXT

MINIMAL_TEXT = "wsp 1\ns=1 n=2\n1: 1 2\n"


def test_parse_minimal():
    p = parse_partition(MINIMAL_TEXT)
    assert p.s == 1
    assert p.n == 2
    assert p.subset(1) == IntSet([1, 2])


def test_parse_base_text(base):
    assert parse_partition(BASE_TEXT) == base


def test_parse_accepts_file_object(tmp_path):
    path = tmp_path / "p.wsp"
    path.write_text(MINIMAL_TEXT, encoding="ascii")
    with open(path, encoding="ascii") as fh:
        assert parse_partition(fh) == parse_partition(MINIMAL_TEXT)


def test_serialize_minimal():
    p = Partition.from_subsets([(1, 2)])
    assert serialize_partition(p) == MINIMAL_TEXT


def test_serialize_base_subset_two_line(base):
    assert "2: 3 5 6 7 19 20 21\n" in serialize_partition(base)


def test_round_trip_base(base):
    assert parse_partition(serialize_partition(base)) == base


def test_round_trip_large_chain_partition(base):
    # identity survives at the scale the construction actually produces
    p7 = iterate(base, 4)[-1][0]
    assert p7.n == 1661
    text = serialize_partition(p7)
    assert serialize_partition(parse_partition(text)) == text


def test_parse_duplicate_across_subsets():
    with pytest.raises(WspFormatError) as e:
        parse_partition("wsp 1\ns=2 n=3\n1: 1 3\n2: 1 2\n")
    assert "duplicate integer 1" in str(e.value)
    assert e.value.line == 4


def test_parse_duplicate_within_subset():
    with pytest.raises(WspFormatError, match="duplicate integer 2"):
        parse_partition("wsp 1\ns=1 n=2\n1: 1 2 2\n")


def test_parse_gap_in_cover():
    with pytest.raises(WspFormatError, match="integer 2 missing"):
        parse_partition("wsp 1\ns=1 n=3\n1: 1 3\n")


def test_parse_empty_subset_line():
    with pytest.raises(WspFormatError, match="subset 2 is empty"):
        parse_partition("wsp 1\ns=2 n=2\n1: 1 2\n2:\n")


def test_parse_missing_subset_line():
    with pytest.raises(WspFormatError, match="unexpected end of input"):
        parse_partition("wsp 1\ns=2 n=3\n1: 1 2\n")


def test_parse_bad_version():
    with pytest.raises(WspFormatError) as e:
        parse_partition("wsp 2\ns=1 n=1\n1: 1\n")
    assert e.value.line == 1


def test_parse_bad_header():
    with pytest.raises(WspFormatError) as e:
        parse_partition("wsp 1\nn=1 s=1\n1: 1\n")
    assert e.value.line == 2


def test_parse_wrong_subset_index():
    with pytest.raises(WspFormatError, match="expected subset 1, found 2"):
        parse_partition("wsp 1\ns=1 n=1\n2: 1\n")


def test_parse_malformed_element():
    with pytest.raises(WspFormatError, match="malformed element 'x'"):
        parse_partition("wsp 1\ns=1 n=1\n1: x\n")


def test_parse_element_out_of_range():
    with pytest.raises(WspFormatError, match="element 5 exceeds order 2"):
        parse_partition("wsp 1\ns=1 n=2\n1: 1 2 5\n")


def test_parse_trailing_line():
    with pytest.raises(WspFormatError, match="unexpected trailing line"):
        parse_partition(MINIMAL_TEXT + "4: 9\n")


def test_parse_skips_comments_and_blanks():
    text = "# generated\n\nwsp 1\n# header next\ns=1 n=2\n\n1: 1 2\n\n# done\n"
    assert parse_partition(text) == parse_partition(MINIMAL_TEXT)


def test_parse_tolerates_unsorted_elements_and_canonicalizes():
    messy = "wsp 1\ns=1 n=3\n1: 3 1 2\n"
    assert serialize_partition(parse_partition(messy)) == "wsp 1\ns=1 n=3\n1: 1 2 3\n"


def test_serialize_parse_idempotent_on_golden(golden_dir):
    for path in sorted(golden_dir.glob("*.wsp")):
        text = path.read_text(encoding="ascii")
        assert serialize_partition(parse_partition(text)) == text


def test_from_subsets_infers_n():
    p = Partition.from_subsets([(1, 3), (2,)])
    assert p.n == 3
    assert p.s == 2


def test_from_subsets_validates():
    with pytest.raises(InvalidPartitionError):
        Partition.from_subsets([(1, 3)])  # 2 missing


def test_subset_accessor_is_one_based(base):
    assert base.subset(1) == IntSet([1, 2, 4, 8, 18])
    with pytest.raises(IndexError):
        base.subset(0)
    with pytest.raises(IndexError):
        base.subset(4)


def test_well_formed_violations_cases():
    overlapping = Partition((IntSet([1, 2]), IntSet([2, 3])), 3)
    kinds = [(v.kind, v.subset_index, v.witness) for v in well_formed_violations(overlapping)]
    assert ("not-a-partition", 2, (2,)) in kinds

    missing = Partition((IntSet([1, 3]),), 3)
    kinds = [(v.kind, v.witness) for v in well_formed_violations(missing)]
    assert ("not-a-partition", (2,)) in kinds

    empty = Partition((IntSet([1]), IntSet()), 1)
    kinds = [v.kind for v in well_formed_violations(empty)]
    assert "empty-subset" in kinds

    stray = Partition((IntSet([1, 2, 9]),), 2)
    assert any(v.witness == (9,) for v in well_formed_violations(stray))

    assert well_formed_violations(base_partition()) == []


def test_validate_raises_with_details():
    bad = Partition((IntSet([1, 2]), IntSet([2, 3])), 3)
    with pytest.raises(InvalidPartitionError, match="duplicated"):
        bad.validate()


def test_serialize_refuses_malformed():
    bad = Partition((IntSet([1, 3]),), 3)
    with pytest.raises(InvalidPartitionError):
        serialize_partition(bad)


@st.composite
def random_partitions(draw):
    n = draw(st.integers(min_value=1, max_value=60))
    s = draw(st.integers(min_value=1, max_value=min(n, 6)))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    rng = random.Random(seed)
    # seed every subset with one element so none is empty, then spread the rest
    values = list(range(1, n + 1))
    rng.shuffle(values)
    groups = [[values[i]] for i in range(s)]
    for v in values[s:]:
        groups[rng.randrange(s)].append(v)
    return Partition(tuple(IntSet(g) for g in groups), n)


@given(random_partitions())
def test_round_trip_identity_property(p):
    assert parse_partition(serialize_partition(p)) == p


@given(random_partitions())
def test_random_valid_partitions_have_no_structural_violations(p):
    assert well_formed_violations(p) == []
