from fractions import Fraction

import pytest

from sparseramsey.bounds import (
    RamseyTable,
    aliases,
    best_interval,
    default_table,
    lower_bounds,
    parse_table,
    ramsey_lower,
    ramsey_upper,
    upper_bounds,
)
from sparseramsey.errors import TableContradictionError, TableParseError
from sparseramsey.graph import Graph, complete_graph
from sparseramsey.patterns import PatternSpec

EMPTY = RamseyTable()


def _seed_with(line_prefix, replacement):
    lines = []
    for line in default_table_text().splitlines():
        lines.append(replacement if line.startswith(line_prefix) else line)
    return parse_table("\n".join(lines))


def default_table_text():
    from importlib import resources

    return resources.files("sparseramsey").joinpath("data/ramsey_table.txt").read_text()


def test_seed_table_loads():
    t = default_table()
    assert len(t) >= 20
    e = t.get("cycle", (4,), 2)
    assert (e.lower, e.upper) == (6, 6) and "6" in e.source
    assert t.generalized(["path:1", "path:1", "clique:3"]).upper == 3


def test_unknown_upper_is_stored():
    t = parse_table('clique 5 | r=2 | 43 ? | "survey"\n')
    assert t.get("clique", (5,), 2).upper is None


@pytest.mark.parametrize(
    "text",
    [
        "clique 3 r=2 6 6",
        'clique | r=2 | 6 6 | "x"',
        'clique 3 | r=2 | 6 | "x"',
        'clique 3 | r=2 | six 6 | "x"',
        'clique 3 | r=2 | 1 6 | "x"',
        'wheel 3 | r=2 | 6 6 | "x"',
        'generalized path:1,clique | r=2 | 2 2 | "x"',
        'generalized path:1,path:1 | r=3 | 2 2 | "x"',
    ],
)
def test_parse_errors_carry_line_numbers(text):
    with pytest.raises(TableParseError) as info:
        parse_table("# header\n" + text + "\n")
    assert info.value.lineno == 2


def test_contradictions():
    with pytest.raises(TableContradictionError):
        parse_table('clique 3 | r=2 | 7 6 | "x"\n')
    with pytest.raises(TableContradictionError):
        parse_table('clique 3 | r=2 | 6 6 | "x"\nclique 3 | r=2 | 5 6 | "y"\n')
    # identical duplicates are fine
    parse_table('clique 3 | r=2 | 6 6 | "x"\nclique 3 | r=2 | 6 6 | "y"\n')


def test_aliases():
    assert ("biclique", (2, 2)) in aliases(PatternSpec.cycle(4))
    assert ("cycle", (4,)) in aliases(PatternSpec.biclique(2, 2))
    assert ("path", (2,)) in aliases(PatternSpec.star(2))
    assert ("cycle", (3,)) in aliases(PatternSpec.clique(3))


def test_fallbacks_without_table():
    assert ramsey_lower(PatternSpec.cycle(6), 3, EMPTY)[0] == (3 - 1) * (6 - 2) + 2
    assert ramsey_lower(PatternSpec.path(4), 2, EMPTY)[0] == 5
    assert ramsey_upper(PatternSpec.clique(4), 2, EMPTY) is None
    assert ramsey_lower(PatternSpec.biclique(2, 2), 2, EMPTY)[0] >= 4


@pytest.mark.parametrize(
    "F,r,table,expected",
    [
        (PatternSpec.clique(3), 2, None, "5/2 <= m* <= 5/2"),
        (PatternSpec.cycle(4), 2, None, "11/6 <= m* <= 21/10"),
        (PatternSpec.biclique(2, 2), 2, None, "11/6 <= m* <= 21/10"),
        (PatternSpec.cycle(4), 3, None, "31/11 <= m* <= 76/23"),
        (PatternSpec.cycle(6), 2, None, "15/8 <= m* < 3"),
        (PatternSpec.cycle(6), 3, None, "17/6 <= m* < 4"),
        (PatternSpec.path(3), 2, None, "1 <= m* <= 1"),
        (PatternSpec.star(5), 2, None, "9/10 <= m* <= 9/10"),
        (PatternSpec.cycle(5), 2, None, "2 <= m* <= 4"),
        (PatternSpec.path(6), 4, None, "9/5 <= m* < 3"),
        (PatternSpec.clique(5), 2, None, "21 <= m* <= 47/2"),
        (PatternSpec.cycle(4), 2, EMPTY, "9/5 <= m* <= 21/10"),
        (PatternSpec.clique(3), 2, EMPTY, "2 <= m* <= inf"),
        (PatternSpec.cycle(5), 2, EMPTY, "2 <= m* <= 119/2"),
    ],
)
def test_intervals(F, r, table, expected):
    t = default_table() if table is None else table
    assert str(best_interval(F, r, t)) == expected


def test_odd_cycle_note():
    iv = best_interval(PatternSpec.cycle(5), 2, default_table())
    assert any("f(r)" in n for n in iv.notes)


def test_explicit_pattern_uses_generic_rules():
    F = PatternSpec.explicit(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))
    iv = best_interval(F, 2, default_table())
    assert iv.lower >= Fraction(3, 2)
    assert "chromatic" in {t.rule for t in lower_bounds(F, 2, default_table())}


def test_shrinking_a_lower_entry_never_raises_the_lower_bound():
    base = best_interval(PatternSpec.cycle(4), 2, default_table()).lower
    for val in (5, 4, 3, 2):
        poisoned = _seed_with("cycle 4 | r=2", f'cycle 4 | r=2 | {val} 6 | "poisoned"')
        assert best_interval(PatternSpec.cycle(4), 2, poisoned).lower <= base


def test_raising_an_upper_entry_never_lowers_the_complete_graph_bound():
    def u2(table):
        return [t.value for t in upper_bounds(PatternSpec.clique(4), 2, table) if t.rule == "complete-graph"]

    base = u2(default_table())
    poisoned = _seed_with("clique 4 | r=2", 'clique 4 | r=2 | 18 25 | "poisoned"')
    assert u2(poisoned) and u2(poisoned)[0] >= base[0]


def test_biclique_lower_nondecreasing_in_r():
    vals = []
    for r in (2, 3, 4, 5):
        vals.append(max(t.value for t in lower_bounds(PatternSpec.biclique(2, 3), r, default_table())))
    assert vals == sorted(vals)


def test_star_values():
    for ell in range(1, 6):
        for r in (2, 3, 4):
            iv = best_interval(PatternSpec.star(ell), r, default_table())
            val = Fraction(r * (ell - 1) + 1, r * (ell - 1) + 2)
            assert iv.lower == iv.upper == val


def test_complete_graph_upper_is_half_of_r_minus_one():
    ups = {t.rule: t.value for t in upper_bounds(PatternSpec.clique(3), 3, default_table())}
    assert ups["complete-graph"] == Fraction(16, 2)
    assert complete_graph(17).num_edges / 17 == 8
