import pytest
from hypothesis import given, settings, strategies as st

from hesslab.qlaurent import parse_qpoly, qint
from hesslab.rootcore import (SUPPORTED, CapabilityError, build_root_system, cartan_matrix,
                              chevalley_basis, min_coset_reps, parse_system, weyl_enumerate,
                              weyl_poincare)

SYSTEMS = [(t, r) for t, top in SUPPORTED.items() for r in range(1, top + 1)
           if not (t in "BC" and r < 2) and not (t == "D" and r < 3) and not (t == "G" and r != 2)]


def test_b3_roots(b3):
    assert [b3.key(k) for k in range(b3.N)] == ["100", "010", "001", "110", "011", "111", "012", "112", "122"]


def test_small_cases():
    a1 = build_root_system("A", 1)
    assert a1.positive == [(1,)]
    a3 = build_root_system("A", 3)
    assert a3.N == 6
    assert cartan_matrix("A", 3) == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    assert parse_system("B3") == ("B", 3)


def test_pairings(b3):
    a3 = build_root_system("A", 3)
    assert a3.pairing(a3.positive[0], 0) == 2
    assert a3.pairing(a3.positive[1], 0) == -1
    assert b3.pairing(b3.positive[1], 2) == -2


def test_unsupported():
    with pytest.raises(CapabilityError):
        build_root_system("E", 6)
    with pytest.raises(CapabilityError):
        build_root_system("A", 12)


def test_weyl_groups():
    a2 = build_root_system("A", 2)
    assert sorted(w.length for w in weyl_enumerate(a2)) == [0, 1, 1, 2, 2, 3]
    assert len(weyl_enumerate(build_root_system("B", 3))) == 48
    a3 = build_root_system("A", 3)
    assert weyl_poincare(a3) == qint(2) * qint(3) * qint(4)


@pytest.mark.parametrize("typ,rank", SYSTEMS)
def test_poincare_matches_degrees(typ, rank):
    rs = build_root_system(typ, rank)
    if rs.weyl_size() > 50000:
        pytest.skip("large Weyl group")
    assert weyl_poincare(rs) == rs.poincare_GB()
    assert len(weyl_enumerate(rs)) == rs.weyl_size()


def test_coset_reps():
    a2 = build_root_system("A", 2)
    assert [w.length for w in min_coset_reps(a2, [0, 1])] == [0]
    assert len(min_coset_reps(a2, [])) == 6
    assert sorted(w.length for w in min_coset_reps(a2, [0])) == [0, 1, 2]


def test_chevalley_constants():
    a2 = build_root_system("A", 2)
    cb = chevalley_basis(a2)
    assert abs(cb.structure_constant(0, 1)) == 1
    b2 = build_root_system("B", 2)
    cb = chevalley_basis(b2)
    ab = b2.find((1, 1))
    assert b2.key(b2.add(1, ab)) == "12"
    assert abs(cb.structure_constant(1, ab)) == 2
    # [h_i, e_gamma] = <gamma, alpha_i^vee> e_gamma
    for g in range(2 * b2.N):
        for i in range(b2.rank):
            br = cb.bracket_basis(2 * b2.N + i, g)
            sign = 1 if g < b2.N else -1
            val = sign * b2.pairing(b2.root(g if g < b2.N else g - b2.N), i)
            assert br == ({g: val} if val else {})


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2"])
def test_jacobi_identity(label):
    rs = build_root_system(*parse_system(label))
    cb = chevalley_basis(rs)
    dim = cb.dim

    def vec(i):
        v = [0] * dim
        v[i] = 1
        return v

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, dim - 1), st.integers(0, dim - 1), st.integers(0, dim - 1))
    def check(a, b, c):
        x, y, z = vec(a), vec(b), vec(c)
        t1 = cb.bracket(x, cb.bracket(y, z))
        t2 = cb.bracket(y, cb.bracket(z, x))
        t3 = cb.bracket(z, cb.bracket(x, y))
        assert all(u + v + w == 0 for u, v, w in zip(t1, t2, t3))

    check()


def test_root_strings_integral():
    for label in ("B3", "C3", "G2"):
        rs = build_root_system(*parse_system(label))
        cb = chevalley_basis(rs)
        for r in range(2 * rs.N):
            for s in range(2 * rs.N):
                if rs.add(r, s) is not None:
                    n = cb.N(r, s)
                    assert n.denominator == 1 and abs(n) == cb._p(r, s) + 1


def test_parse_helpers():
    assert parse_qpoly("[2][3][4]") == weyl_poincare(build_root_system("A", 3))
