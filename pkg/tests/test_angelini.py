import pytest

from seqlab.angelini import (LanguageTable, admissible_seeds, dump_table, english,
                             frequencies, generate, load_table, parse_table,
                             verify_self_describing)
from seqlab.errors import GenerationError

KNOWN_PREFIX = [1, 9, 9, 5, 5, 9, 9, 5, 5, 9, 1, 3, 13, 17, 1, 3, 13, 17, 9, 5, 5, 9, 9, 5,
                5, 9, 1, 3, 13, 17]


def recompute(terms, names):
    """Independent re-derivation: spell, rank with ord(), difference."""
    letters = "".join(names[t] for t in terms)
    return [abs(ord(letters[i + 1]) - ord(letters[i])) for i in range(len(letters) - 1)]


def test_english_table_shape():
    t = english()
    assert t.rank["a"] == 1 and t.rank["z"] == 26
    assert t.names[1] == "one" and t.names[26] == "twentysix" and t.names[0] == "zero"


def test_generate_known_prefix():
    assert generate(1, 30) == KNOWN_PREFIX
    assert generate(1, 1) == [1]


def test_generate_matches_recomputation():
    terms = generate(1, 2000)
    diffs = recompute(terms, english().names)
    assert diffs[: len(terms)] == terms


def test_missing_values():
    terms = set(generate(1, 10**4))
    assert not terms & {16, 19, 20, 22, 23, 24, 25, 26}


def test_prefix_determinism():
    long = generate(1, 5000)
    for k in (1, 10, 777, 4999):
        assert generate(1, k) == long[:k]


def test_round_trip_verification():
    for k in (1, 2, 50, 10**4):
        assert verify_self_describing(generate(1, k))


def test_verify_examples():
    assert verify_self_describing(KNOWN_PREFIX)
    assert not verify_self_describing([1, 9, 9, 5, 6])
    assert verify_self_describing([])


def test_inadmissible_seed():
    with pytest.raises(GenerationError):
        generate(2, 10)


def test_missing_name():
    table = LanguageTable({"a": 1, "f": 6, "b": 2}, {5: "afb"})
    with pytest.raises(GenerationError, match="name missing"):
        generate(5, 3, table)


def test_admissible_seeds():
    assert admissible_seeds(english()) == [1]
    assert admissible_seeds(LanguageTable({"a": 1, "f": 6}, {5: "af"})) == [5]
    assert admissible_seeds(english().restricted(range(2, 27))) == []


def test_frequencies():
    f = frequencies(KNOWN_PREFIX)
    assert KNOWN_PREFIX.count(9) == 9
    assert f[9] == pytest.approx(9 / 30)
    assert frequencies([5, 5, 5]) == {5: 1.0}
    assert sum(f.values()) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        frequencies([])


def test_table_file_round_trip(tmp_path):
    path = tmp_path / "en.txt"
    path.write_text("# comment\n" + dump_table(english()))
    assert load_table(path) == english()


def test_table_normalization():
    t = parse_table("rank a 1\nrank b 2\nname 1 A-b a\n")
    assert t.names[1] == "aba"


def test_table_rejects_unranked_letters():
    with pytest.raises(ValueError):
        parse_table("rank a 1\nname 1 ab\n")
    with pytest.raises(ValueError):
        parse_table("bogus a 1\n")
