import pytest

from codlib import (
    BitVec,
    CodMatrix,
    Entry,
    MixedConjugationError,
    construct_g,
    row_id,
    verify_numeric,
    verify_symbolic,
    zero_pattern,
)


def test_zero_patterns_of_known_design(eq3):
    assert str(zero_pattern(eq3, 1)) == "111"
    assert str(zero_pattern(eq3, 2)) == "110"
    assert str(zero_pattern(eq3, 3)) == "101"
    assert str(zero_pattern(eq3, 4)) == "011"


def test_zero_pattern_all_zero_row():
    v = BitVec.unit(2, 1)
    cod = CodMatrix.from_rows(1, [[Entry(v)], [None]])
    assert str(zero_pattern(cod, 2)) == "0"


def test_row_id_examples():
    g = construct_g(2)
    assert [str(row_id(g, r)) for r in range(1, 5)] == [
        "1110",
        "1101",
        "1011",
        "0111",
    ]


def test_row_id_rejects_mixed_conjugation():
    z1, z2, z3 = (BitVec.unit(4, i) for i in (1, 2, 3))
    bad = CodMatrix.from_rows(
        2, [[Entry(z1), Entry(z2, 1, True), Entry(z3)], [None, None, None]] * 2
    )
    with pytest.raises(MixedConjugationError):
        row_id(bad, 1)


def test_verify_symbolic_known_design(eq3):
    assert verify_symbolic(eq3).ok


def test_verify_symbolic_sign_flip_localized(eq3):
    rows = [list(r) for r in eq3.cells]
    rows[1][0] = rows[1][0].negated()  # flip cell (2,1)
    bad = CodMatrix.from_rows(2, rows)
    report = verify_symbolic(bad)
    assert not report.ok
    assert [where for where, _ in report.failures] == [(1, 2)]


def test_verify_symbolic_trivial_design():
    cod = CodMatrix.from_rows(1, [[Entry(BitVec.unit(2, 1))]])
    assert verify_symbolic(cod).ok


def test_verify_symbolic_catches_bad_diagonal():
    # same variable twice in one column: diagonal coefficient becomes 2
    v = BitVec.unit(2, 1)
    cod = CodMatrix.from_rows(1, [[Entry(v)], [Entry(v)]])
    report = verify_symbolic(cod)
    assert not report.ok


def test_verify_numeric(eq3):
    assert verify_numeric(eq3, trials=10, seed=0, tol=1e-9)
    rows = [list(r) for r in eq3.cells]
    rows[1][0] = rows[1][0].negated()
    bad = CodMatrix.from_rows(2, rows)
    assert not verify_numeric(bad, trials=10, seed=0, tol=1e-9)


def test_verify_numeric_trivial():
    cod = CodMatrix.from_rows(1, [[Entry(BitVec.unit(2, 1))]])
    assert verify_numeric(cod, trials=3, seed=5, tol=1e-9)


def test_symbolic_implies_numeric_for_generated_designs():
    for m in (1, 2, 3):
        g = construct_g(m)
        assert verify_symbolic(g).ok
        assert verify_numeric(g, trials=5, seed=m, tol=1e-9)


@pytest.mark.parametrize("m", [2, 3])
def test_instance_pair_pattern_relations(m):
    # same conjugation: patterns differ exactly at the two instance columns;
    # opposite conjugation: patterns agree exactly there
    g = construct_g(m)
    patterns = [zero_pattern(g, r) for r in range(1, g.p + 1)]
    for var in g.variables():
        inst = g.instances(var)
        for a in range(len(inst)):
            for b in range(a + 1, len(inst)):
                ra, ca, ea = inst[a]
                rb, cb, eb = inst[b]
                diff = patterns[ra - 1] ^ patterns[rb - 1]
                if ea.conj == eb.conj:
                    assert set(diff.support()) == {ca, cb}
                else:
                    same = (diff ^ BitVec.ones(g.n)).support()
                    assert set(same) == {ca, cb}


def test_variable_occurrence_counts():
    for m in (2, 3):
        g = construct_g(m)
        for var in g.variables():
            inst = g.instances(var)
            assert len(inst) == 2 * m - 1
            cols = [c for _, c, _ in inst]
            assert sorted(cols) == list(range(1, 2 * m))
