from kneser_colorings.exact_cover import exact_cover


def test_knuth_example():
    rows = {
        "A": [1, 4, 7], "B": [1, 4], "C": [4, 5, 7],
        "D": [3, 5, 6], "E": [2, 3, 6, 7], "F": [2, 7],
    }
    sol = exact_cover(range(1, 8), rows)
    assert sorted(sol) == ["B", "D", "F"]


def test_unsolvable_returns_none():
    assert exact_cover([1, 2, 3], {"A": [1, 2], "B": [2, 3]}) is None


def test_deterministic():
    rows = {i: [i % 4, 4 + i % 3, 7 + i % 2] for i in range(20)}
    cols = set()
    for cs in rows.values():
        cols.update(cs)
    first = exact_cover(cols, rows)
    for _ in range(3):
        assert exact_cover(cols, rows) == first
