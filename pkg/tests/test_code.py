import math
import random

import pytest

from ktcodes.code import (
    Code,
    CodeFormatError,
    format_code,
    min_distance,
    naive_min_distance,
    parse_code,
    read_code,
    write_code,
)
from ktcodes.perm import DegreeMismatch, Permutation, alternating_group, identity

P = Permutation.parse


def random_code(rng, n, size):
    seen = set()
    while len(seen) < size:
        im = list(range(1, n + 1))
        rng.shuffle(im)
        seen.add(Permutation(tuple(im)))
    return Code(seen)


def test_code_needs_two_words():
    with pytest.raises(ValueError):
        Code([identity(3)])
    with pytest.raises(ValueError):
        Code([identity(3), identity(3)])
    with pytest.raises(DegreeMismatch):
        Code([identity(3), identity(4)])


def test_code_is_canonically_ordered():
    c = Code([P("3 2 1"), P("1 2 3"), P("2 1 3")])
    assert c.words == (P("1 2 3"), P("2 1 3"), P("3 2 1"))
    assert c == Code(reversed(c.words))
    assert hash(c) == hash(Code(reversed(c.words)))
    assert P("2 1 3") in c and P("2 3 1") not in c


def test_min_distance_examples():
    assert alternating_group(4).min_distance() == 2
    assert Code([identity(3), P("3 2 1")]).min_distance() == 3
    assert Code([P("1 2 3 4"), P("2 1 4 3"), P("3 4 1 2")]).min_distance() == 2
    assert naive_min_distance(Code([P("1 2 3 4"), P("2 1 4 3"), P("3 4 1 2")])) == 2


def test_min_distance_is_cached():
    c = alternating_group(5)
    assert c.cached_min_distance is None
    assert c.min_distance() == 2
    assert c.cached_min_distance == 2


def test_min_distance_floor_early_exit():
    c = Code([P("1 2 3 4"), P("4 3 2 1"), P("1 2 4 3")])
    assert min_distance(c) == 1
    # asking "is the minimum above 5?" returns some pair at distance <= 5
    assert min_distance(c, floor=5) <= 5


def test_min_distance_matches_naive_on_random_codes():
    rng = random.Random(2024)
    for _ in range(40):
        n = rng.randint(2, 8)
        size = rng.randint(2, min(200, math.factorial(n)))
        c = random_code(rng, n, size)
        assert min_distance(c) == naive_min_distance(c)


def test_code_file_round_trip(tmp_path):
    c = alternating_group(4)
    path = tmp_path / "a4.code"
    write_code(c, path, comment="A_4\nsecond line")
    text = path.read_text()
    assert text.startswith("# A_4\n# second line\nn=4\n1 2 3 4\n")
    assert read_code(path) == c
    assert parse_code(format_code(c)) == c


def test_code_file_comments_and_blank_lines():
    text = "# header comment\n\nn=3\n# a word\n1 2 3\n\n3 2 1\n"
    c = parse_code(text)
    assert c.degree == 3 and len(c) == 2


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3\n3 2 1\n",  # no header
        "n=x\n1 2\n2 1\n",
        "n=3\n1 2 3\n",  # single word
        "n=3\n1 2 3\n1 2 3\n",  # duplicate
        "n=3\n1 2\n2 1\n",  # wrong degree
        "n=3\n1 2 2\n3 2 1\n",
        "",
    ],
)
def test_code_file_errors(text):
    with pytest.raises(CodeFormatError):
        parse_code(text)
