import pytest

import eqalg


def test_group_and_presets():
    s3 = eqalg.Group("S3")
    assert s3.order == 6
    assert s3.subgroup_count == 6
    assert s3.conjugacy_classes == 4
    assert len(eqalg.small_group_presets(12)) == 24


def test_bredon_cohomology_of_cyclic_groups():
    assert eqalg.bredon_cohomology(eqalg.Group("C2")) == ["Z", "0", "Z/2", "0", "Z/2"]
    assert eqalg.bredon_cohomology(eqalg.Group("C3"), degree=2) == ["Z", "0", "Z/3"]
    assert eqalg.bredon_cohomology(eqalg.Group("S3"), family="all") == ["Z", "0", "0", "0", "0"]


def test_projectivity():
    assert eqalg.constant_is_projective(eqalg.Group("C2xC2"))
    assert eqalg.constant_is_projective(eqalg.Group("S3"), family="triv", ring="Q")
    assert not eqalg.constant_is_projective(eqalg.Group("S3"), family="triv", ring="Z")


def test_hom_ranks():
    g = eqalg.Group("S3")
    triv, whole = 0, g.subgroup_count - 1
    assert eqalg.hom_rank(g, "orbit", triv, triv) == 6
    assert eqalg.hom_rank(g, "hecke", triv, triv) == 6
    assert eqalg.hom_rank(g, "orbit", whole, triv) == 0
    assert eqalg.hom_rank(g, "mackey", whole, whole) == 4
    with pytest.raises(eqalg.Error):
        eqalg.hom_rank(g, "bogus", 0, 0)


def test_structure_checks():
    for name in ["C2", "S3", "Q8"]:
        assert eqalg.green_axioms_hold(eqalg.Group(name))
    assert eqalg.hecke_counting_matches_psi(eqalg.Group("S3"))


def test_houghton_group_law():
    q = eqalg.HoughtonElement(2, [((0, 1), (1, 1)), ((1, 1), (0, 1))])
    assert q.is_finite_order()
    assert q.cycle_type() == [2]
    assert q * q == eqalg.HoughtonElement(2)
    shift = eqalg.HoughtonElement(2, [((0, 2), (0, 1))], [1, -1])
    assert shift.phi() == [1, -1]
    assert shift(5, 1) == (6, 1)
    assert shift(0, 2) == (0, 1)
    assert shift * shift.inverse() == eqalg.HoughtonElement(2)


def test_houghton_centralisers():
    q = eqalg.HoughtonElement(2, [((0, 1), (1, 1)), ((1, 1), (0, 1))])
    assert eqalg.centraliser(q)["shape"] == "H_2 x C_2"
    c = eqalg.centraliser(eqalg.odd_example(3))
    assert c["shape"] == "H_1 x Z"
    assert c["free_abelian_rank"] == 1
    assert len(eqalg.gamma_components(eqalg.odd_example(5))) == 2


def test_houghton_conjugacy_and_errors():
    a = eqalg.HoughtonElement(2, [((0, 1), (1, 1)), ((1, 1), (0, 1))])
    b = eqalg.HoughtonElement(2, [((3, 2), (5, 2)), ((5, 2), (3, 2))])
    c = eqalg.HoughtonElement(2, [((0, 1), (1, 1)), ((1, 1), (0, 1)), ((2, 1), (3, 1)), ((3, 1), (2, 1))])
    assert eqalg.are_conjugate(a, b)
    assert not eqalg.are_conjugate(a, c)
    with pytest.raises(eqalg.Error, match="NotBijective"):
        eqalg.HoughtonElement(2, [((0, 1), (1, 1))])
    with pytest.raises(eqalg.Error, match="FiniteOrder"):
        eqalg.gamma_components(a)
