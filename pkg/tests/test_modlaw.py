import pytest
from hypothesis import given, settings, strategies as st

from hesslab.idealkit import enumerate_ideals, hessenberg_functions
from hesslab.modlaw import (QVec, check_modular, combinatorial_triples,
                            combinatorial_triples_agree, enumerate_triples, law_residual,
                            solve_modular)
from hesslab.qlaurent import ONE, ZERO, parse_qpoly, q
from hesslab.rootcore import build_root_system
from hesslab.verify import parabolic_rows
from hesslab.wrepkit import char_table, parabolic_f

B3_TRIPLES = {(3, 5, 11), (4, 5, 11), (4, 6, 9), (7, 8, 12), (9, 10, 13),
              (11, 12, 13), (12, 13, 17), (14, 15, 16), (17, 18, 19), (18, 19, 20)}


def test_b3_triples(b3, tables):
    id_of = tables[0].id_of_mask()
    got = {tuple(id_of[I.mask] for I in (t.I0, t.I1, t.I2)) for t in enumerate_triples(b3)}
    assert got == B3_TRIPLES


def test_small_triples():
    assert enumerate_triples(build_root_system("A", 1)) == []
    ts = enumerate_triples(build_root_system("A", 2))
    # one triple per simple root; the diagram flip exchanges them
    assert len(ts) == 2
    assert {t.alpha for t in ts} == {0, 1}
    for t in ts:
        assert (t.I0.size, t.I1.size, t.I2.size) == (2, 1, 0)
    assert combinatorial_triples(2) == []


def test_combinatorial_examples():
    ts = combinatorial_triples(6)
    assert ((2, 3, 3, 6, 6, 6), (2, 3, 4, 6, 6, 6), (2, 3, 5, 6, 6, 6)) in ts
    assert ((2, 2, 3), (2, 3, 3), (3, 3, 3)) in combinatorial_triples(3)


@pytest.mark.parametrize("n", range(1, 8))
def test_combinatorial_matches_roots(n):
    assert combinatorial_triples_agree(n)


def test_law_on_sign_column(tables):
    _, t2 = tables
    col = "(),(1,1,1)"
    F = [t2.cell(i, col) for i in (18, 19, 20)]
    assert law_residual(*F) == ZERO
    assert (ONE + q) * parse_qpoly("[2][4][5]") == parse_qpoly("[2][4][6]") + q * parse_qpoly("[2][4][4]")


def test_constant_family_and_fault():
    triples = sorted(B3_TRIPLES)
    F = {i: parse_qpoly("3+q") for i in range(1, 21)}
    assert check_modular(triples, F) == []
    F[15] = F[15] + ONE
    bad = check_modular(triples, F)
    assert [v.triple for v in bad] == [(14, 15, 16)]
    assert bad[0].residual == ONE + q


def test_solver_trivial():
    triples = sorted(B3_TRIPLES)
    F = {i: parse_qpoly("1+q^2") for i in range(1, 21)}
    res = solve_modular(triples, F, universe=range(1, 21))
    assert res.values == F and not res.undetermined and not res.inconsistent


def test_solver_detects_conflict():
    triples = [(1, 2, 3)]
    res = solve_modular(triples, {1: ONE, 2: ONE, 3: q})
    assert res.inconsistent and res.certificate


def test_solver_from_parabolic_rows(b3, tables):
    _, t2 = tables
    ct = char_table(b3)
    known = {}
    for r, levi in parabolic_rows(b3, t2).items():
        f = parabolic_f(b3, ct, levi)
        known[r] = QVec({c: f[t2.column_key(c)] for c in t2.columns})
    res = solve_modular(sorted(B3_TRIPLES), known, universe=t2.rows)
    assert not res.inconsistent
    for r, v in res.values.items():
        assert v == QVec({c: t2.cell(r, c) for c in t2.columns})
    assert res.undetermined == set(t2.rows) - set(res.values)
    assert res.undetermined


def test_joint_elimination_needed():
    # n = 4 cannot be finished one triple at a time
    from hesslab.symkit import _an_family
    F = _an_family(4)
    assert set(F) == set(hessenberg_functions(4))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_linear_families_obey_law(coef):
    # constant families satisfy (1+q)c = c + qc, for any constant
    rs = build_root_system("A", 3)
    ideals = enumerate_ideals(rs)
    ts = [(t.I0.mask, t.I1.mask, t.I2.mask) for t in enumerate_triples(rs)]
    one = {I.mask: ONE for I in ideals}
    a, b = coef
    F = {k: v * a + v * q * b for k, v in one.items()}
    assert check_modular(ts, F) == []
