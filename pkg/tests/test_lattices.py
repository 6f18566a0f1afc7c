"""Root enumeration, discriminant groups, and the boundary bookkeeping."""

from fractions import Fraction

import pytest

from canon4.lattices import (
    THEOREM_COEFFICIENTS,
    Isometry,
    NonexistenceCertificate,
    borcherds_orders,
    cusp_invariants,
    discriminant_group,
    fpf_order3,
    heegner_types,
    make_lattice,
    orthogonal_complement,
    root_system,
    roots,
    short_vectors,
)


@pytest.mark.parametrize(
    "label,count",
    [("A2", 6), ("D4", 24), ("E6", 72), ("E7", 126), ("E8", 240)],
)
def test_root_counts_by_enumeration(label, count):
    assert root_system(make_lattice(label)).count == count


def test_root_system_of_sum():
    rs = root_system(make_lattice("A2+A2+E6"))
    assert rs.count == 6 + 6 + 72
    # components are reported largest first
    assert rs.label == "E6+A2+A2"


def test_short_vectors_come_in_pairs():
    vs = short_vectors(make_lattice("A2").flipped(), 2)
    assert len(vs) == 6
    as_set = {tuple(v) for v in vs}
    for v in vs:
        assert tuple(-x for x in v) in as_set


def test_make_lattice_grammar():
    assert make_lattice("U").rank == 2
    assert make_lattice("U(3)+E8").rank == 10
    assert make_lattice("A(2)").rank == 2
    with pytest.raises(ValueError):
        make_lattice("Q5")
    with pytest.raises(ValueError):
        make_lattice("")


def test_discriminant_groups():
    assert discriminant_group(make_lattice("A2")) == (3,)
    assert discriminant_group(make_lattice("E8")) == ()
    assert discriminant_group(make_lattice("U(3)+E8")) == (3, 3)
    assert discriminant_group(make_lattice("D4")) == (2, 2)


def test_orthogonal_complement_of_a2_in_e6():
    e6 = make_lattice("E6")
    # adjacent simple roots span an A2
    vecs = [
        [1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
    ]
    comp, _ = orthogonal_complement(e6, vecs)
    assert root_system(comp).label == "A2+A2"


def test_heegner_triple():
    rows = {h.name: h for h in heegner_types()}
    assert set(rows) == {"H_v", "H_n", "H_h"}
    assert rows["H_v"].complement_label == "D4+E6"
    assert rows["H_v"].root_count == 96
    assert rows["H_n"].complement_label == "A2+A2+E6"
    assert rows["H_n"].root_count == 84
    assert rows["H_h"].complement_label == "A2+E8"
    assert rows["H_h"].root_count == 246
    assert all(h.contains_base for h in rows.values())


def test_borcherds_rows_flag_only_the_nodal_case():
    rows = {r.name: r for r in borcherds_orders()}
    assert rows["H_n"].vanishing_order == 3
    assert rows["H_n"].catalogued_order == 2
    assert rows["H_n"].flagged is True
    assert rows["H_v"].vanishing_order == 9
    assert rows["H_v"].flagged is False
    assert rows["H_h"].vanishing_order == 84
    assert rows["H_h"].flagged is False
    # dividing by the ramification indices lands on the polarization
    assert (
        rows["H_n"].coefficient,
        rows["H_v"].coefficient,
        rows["H_h"].coefficient,
    ) == THEOREM_COEFFICIENTS
    assert THEOREM_COEFFICIENTS == (1, Fraction(9, 2), 14)


def test_cusp_labels():
    recs = cusp_invariants()
    labels = [r.label for r in recs]
    assert labels == ["E6+E6+A2+A2", "E6+A2+E8", "E8+E8"]
    hyper = [r for r in recs if r.hyperelliptic]
    assert len(hyper) == 1
    assert hyper[0].label == "E6+A2+E8"
    assert [r.case for r in recs] == ["i", "ii", "iii"]


@pytest.mark.parametrize("label", ["A2", "D4", "E6", "E8"])
def test_fixed_point_free_triality_exists(label):
    iso = fpf_order3(make_lattice(label))
    assert isinstance(iso, Isometry)
    assert iso.order() == 3
    assert iso.is_fixed_point_free()


@pytest.mark.parametrize("label", ["A1", "A3", "A4"])
def test_fixed_point_free_triality_ruled_out(label):
    cert = fpf_order3(make_lattice(label))
    assert isinstance(cert, NonexistenceCertificate)
    assert cert.kind in ("parity", "exhaustive")


def test_fpf_on_sums_acts_blockwise():
    iso = fpf_order3(make_lattice("A2+A2"))
    assert isinstance(iso, Isometry)
    assert iso.order() == 3
    assert iso.is_fixed_point_free()
