from fractions import Fraction

import pytest

from codlib import (
    BitVec,
    CodMatrix,
    DesignError,
    construct_g,
    extend_g,
    extract_bj,
    max_rate,
    min_delay,
    row_id,
    shares_alamouti,
    structural_report,
)


def test_extract_bj_known_design(eq3):
    z1 = BitVec.unit(4, 1)
    bj = extract_bj(eq3, z1)
    assert (bj.n1, bj.n2) == (1, 2)
    assert bj.top_rows == [1]
    assert bj.bottom_rows == [2, 3]


def test_extract_bj_standard_design():
    g = construct_g(2)
    a = BitVec.from_string("1100")
    bj = extract_bj(g, a)
    assert (bj.n1, bj.n2) == (1, 2)
    assert all(e is not None for row in bj.block for e in row)


def test_extract_bj_shape_m3():
    g = construct_g(3)
    for var in g.variables():
        bj = extract_bj(g, var)
        assert (bj.n1, bj.n2) == (2, 3)


def test_extract_bj_missing_variable(eq3):
    with pytest.raises(DesignError):
        extract_bj(eq3, BitVec.from_string("1111"))


def test_shares_alamouti_known_design(eq3):
    assert shares_alamouti(eq3, 1, 2) == (1, 2)
    assert shares_alamouti(eq3, 2, 3) is None
    assert shares_alamouti(eq3, 2, 2) is None


def test_shares_alamouti_characterization_on_g():
    # rows share an Alamouti 2x2 exactly when their ids differ by e^e_i^e_j
    for m in (2, 3):
        g = construct_g(m)
        ids = [row_id(g, r) for r in range(1, g.p + 1)]
        e = BitVec.ones(2 * m)
        for x in range(1, g.p + 1):
            for y in range(x + 1, g.p + 1):
                diff = ids[x - 1] ^ ids[y - 1] ^ e
                predicted = None
                if diff.weight() == 2:
                    i, j = diff.support()
                    if j <= 2 * m - 1 and all(
                        v.bit(i) and v.bit(j) for v in (ids[x - 1], ids[y - 1])
                    ):
                        predicted = (i, j)
                assert shares_alamouti(g, x, y) == predicted


def test_max_rate_values():
    assert max_rate(3) == Fraction(3, 4)
    assert max_rate(6) == Fraction(2, 3)
    assert max_rate(1) == 1


def test_min_delay_values():
    assert min_delay(5) == 15
    assert min_delay(6) == 30
    assert min_delay(4) == 4


def test_bounds_relations():
    for m in range(1, 6):
        assert max_rate(2 * m - 1) == max_rate(2 * m)
    for m in range(2, 6):
        if m % 2 == 0:
            assert min_delay(2 * m) == min_delay(2 * m - 1)
        else:
            assert min_delay(2 * m) == 2 * min_delay(2 * m - 1)


def test_bounds_input_validation():
    with pytest.raises(ValueError):
        max_rate(0)
    with pytest.raises(ValueError):
        min_delay(1)


def test_structural_report_known_design(eq3):
    report = structural_report(eq3)
    assert report.ok


def test_structural_report_g5():
    g = construct_g(3)
    report = structural_report(g)
    assert report.ok
    from codlib import zero_pattern

    weights = [zero_pattern(g, r).weight() for r in range(1, g.p + 1)]
    assert weights.count(4) == 5 and weights.count(3) == 10


def test_structural_report_extended_design():
    assert structural_report(extend_g(2).design).ok


def test_structural_report_missing_row(eq3):
    truncated = CodMatrix.from_rows(2, [list(eq3.row(r)) for r in (1, 2, 3)])
    report = structural_report(truncated)
    completeness = next(
        c for c in report.checks if c.name == "zero_pattern_completeness"
    )
    assert not completeness.ok
    assert completeness.witnesses
