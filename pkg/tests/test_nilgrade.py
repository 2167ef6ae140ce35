import pytest

from hesslab.idealkit import make_ideal
from hesslab.nilgrade import (Decomposition, G2Subspace, block_ideal, cell_dim, dclp_poincare,
                              g_poly, generic_subspaces, grading_for_partition, grading_from_wdd,
                              id2_subspaces, is_b0_stable, is_generic, orbit_partitions,
                              partition_orbit_dim, psi, psi_surjective, t_of_w, w0_reps,
                              wdd_from_partition)
from hesslab.qlaurent import ONE, parse_qpoly
from hesslab.rootcore import build_root_system, chevalley_basis
from hesslab.verify import table1_blocks


def u_of(rs):
    return make_ideal(rs, range(rs.N))


def test_regular_grading():
    rs = build_root_system("A", 3)
    g = grading_from_wdd(rs, "222")
    assert g.phi2 == [0, 1, 2]
    assert g.phi0_pos == []
    assert grading_from_wdd(rs, "000").phi0_pos == list(range(rs.N))


def test_subregular_a2():
    rs = build_root_system("A", 2)
    g = grading_for_partition(rs, (2, 1))
    assert g.labels == (1, 1)
    assert g.phi(1) == [0, 1]
    assert g.phi2 == [2]
    assert g.phi0_pos == []


def test_wdd_examples():
    assert wdd_from_partition("A", 3, (4,)) == (2, 2, 2)
    assert wdd_from_partition("A", 2, (2, 1)) == (1, 1)
    want = {(7,): "222", (5, 1, 1): "220", (3, 3, 1): "020", (3, 2, 2): "101",
            (3, 1, 1, 1, 1): "200", (2, 2, 1, 1, 1): "010", (1,) * 7: "000"}
    assert {lam: "".join(map(str, wdd_from_partition("B", 3, lam))) for lam in orbit_partitions("B", 3)} == want
    with pytest.raises(ValueError):
        wdd_from_partition("B", 3, (2, 2, 2, 1))


@pytest.mark.parametrize("typ,rank", [("A", 3), ("A", 4), ("B", 3), ("C", 3), ("B", 2)])
def test_orbit_dims(typ, rank):
    rs = build_root_system(typ, rank)
    for lam in orbit_partitions(typ, rank):
        assert grading_for_partition(rs, lam).orbit_dim() == partition_orbit_dim(typ, rank, lam)


def test_psi_and_t():
    rs = build_root_system("A", 2)
    g = grading_for_partition(rs, (2, 1))
    u = u_of(rs)
    e = rs.identity()
    assert psi(rs, g, e, u) == G2Subspace(1 << 2)
    s1 = rs.from_word([0])
    assert psi(rs, g, s1, u).roots() == [2]
    assert t_of_w(rs, g, s1, u) == 1
    reg = grading_for_partition(rs, (3,))
    assert psi(rs, reg, e, u).roots() == [0, 1]
    assert t_of_w(rs, reg, e, u) == 0 and cell_dim(rs, reg, e, u) == 0


def test_psi_rejects_non_reps():
    rs = build_root_system("A", 2)
    g = grading_from_wdd(rs, "20")
    bad = next(w for w in [rs.from_word([1])] if w not in w0_reps(rs, g))
    with pytest.raises(ValueError):
        psi(rs, g, bad, u_of(rs))


def test_genericity():
    rs = build_root_system("A", 3)
    cb = chevalley_basis(rs)
    reg = grading_from_wdd(rs, "222")
    full = G2Subspace(0b111)
    assert is_generic(cb, reg, full)
    for m in range(7):
        assert not is_generic(cb, reg, G2Subspace(m))
    for U in generic_subspaces(cb, reg):
        assert is_b0_stable(rs, reg, U)


def test_g_polys():
    a2 = build_root_system("A", 2)
    reg = grading_for_partition(a2, (3,))
    assert g_poly(a2, reg, u_of(a2), G2Subspace(0b11)) == ONE
    sub = grading_for_partition(a2, (2, 1))
    assert g_poly(a2, sub, u_of(a2), G2Subspace(0b100)) == parse_qpoly("1+2q")
    zero = grading_for_partition(a2, (1, 1, 1))
    assert Decomposition(a2, zero).g_polys(u_of(a2)) == {G2Subspace(0): ONE}


def test_dclp_small():
    a2 = build_root_system("A", 2)
    reg = grading_for_partition(a2, (3,))
    assert dclp_poincare(a2, reg, u_of(a2), {G2Subspace(0b11): ONE}) == ONE
    sub = grading_for_partition(a2, (2, 1))
    assert dclp_poincare(a2, sub, u_of(a2), {G2Subspace(0b100): ONE}) == parse_qpoly("1+2q")


def test_dclp_b3_row18(b3, tables):
    t1, _ = tables
    col = "[2^2,1^3]"
    gr, gen, blocks = table1_blocks(b3, t1, chevalley_basis(b3))[col]
    assert dclp_poincare(b3, gr, t1.ideal[18], blocks, generic=gen) == parse_qpoly("[2][2][2]")


def test_block_ideals_are_starred(b3, tables):
    t1, _ = tables
    cb = chevalley_basis(b3)
    id_of = t1.id_of_mask()
    got = set()
    for lam in orbit_partitions("B", 3):
        gr = grading_for_partition(b3, lam)
        got |= {id_of[block_ideal(b3, gr, U).mask] for U in generic_subspaces(cb, gr)}
    assert got == set(t1.starred())


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_psi_surjective_type_a(rank):
    rs = build_root_system("A", rank)
    for lam in orbit_partitions("A", rank):
        assert psi_surjective(rs, grading_for_partition(rs, lam))


def test_psi_surjective_b3(b3):
    for lam in orbit_partitions("B", 3):
        gr = grading_for_partition(b3, lam)
        assert psi_surjective(b3, gr)
        assert len(id2_subspaces(b3, gr)) >= 1
