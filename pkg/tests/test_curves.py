import random

import pytest

from eclat.curves import Curve, curve_group, group_structure, point_order, subgroup
from eclat.errors import CurveTooLarge, PointNotOnCurve, SingularCurve


def test_curve_validation():
    with pytest.raises(ValueError):
        Curve(4, 1, 1)  # not prime
    with pytest.raises(ValueError):
        Curve(3, 1, 1)  # p must exceed 3
    with pytest.raises(SingularCurve):
        Curve(5, 0, 0)


def test_point_add_identity_and_inverse():
    c = Curve(7, 2, 3)
    P = next(pt for pt in c.points() if pt is not None)
    assert c.add(P, None) == P
    assert c.add(None, P) == P
    assert c.add(P, c.neg(P)) is None


def test_addition_table_abelian_and_associative():
    # exhaustive over all point pairs (and triples for associativity)
    c = Curve(7, 2, 3)
    pts = c.points()
    for P in pts:
        for Q in pts:
            s = c.add(P, Q)
            assert s in pts
            assert s == c.add(Q, P)
    for P in pts:
        for Q in pts:
            for R in pts:
                assert c.add(c.add(P, Q), R) == c.add(P, c.add(Q, R))


def test_curve_points_brute_force_count():
    c = Curve(5, 0, 1)  # y^2 = x^3 + 1
    pts = c.points()
    expected = {(x, y) for x in range(5) for y in range(5) if (y * y - x**3 - 1) % 5 == 0}
    assert set(pts) == expected | {None}
    assert len(pts) == 6


@pytest.mark.parametrize("p", [5, 7, 11])
def test_hasse_bound_and_on_curve(p):
    for a in range(p):
        for b in range(p):
            try:
                c = Curve(p, a, b)
            except SingularCurve:
                continue
            pts = c.points()
            assert (len(pts) - p - 1) ** 2 <= 4 * p
            assert all(c.contains_point(pt) for pt in pts)


def test_curve_too_large():
    with pytest.raises(CurveTooLarge):
        Curve(211, 2, 3).points(max_p=100)


def test_point_order_matches_repeated_addition():
    c = Curve(11, 3, 5)
    pts = c.points()
    for P in pts:
        k = point_order(c, P, len(pts))
        acc = None
        steps = 0
        while True:
            acc = c.add(acc, P)
            steps += 1
            if acc is None:
                break
        assert steps == k or (P is None and k == 1)


def test_group_structure_prime_order_is_cyclic():
    c = Curve(5, 1, 1)  # 9 points; n1 must divide p - 1 = 4, so cyclic
    cg = curve_group(c)
    assert (cg.structure.m, cg.structure.n) == (1, 9)


def test_group_structure_full_two_torsion():
    c = Curve(5, 1, 0)  # y^2 = x^3 + x: four points, all 2-torsion
    cg = curve_group(c)
    assert (cg.structure.m, cg.structure.n) == (2, 2)
    assert all(point_order(c, P, 4) <= 2 for P in cg.points)


def test_group_structure_divisibility_constraints():
    for p in (5, 7, 13):
        for a in range(p):
            for b in range(p):
                try:
                    c = Curve(p, a, b)
                except SingularCurve:
                    continue
                cg = curve_group(c)
                n1, n2 = cg.structure.m, cg.structure.n
                assert n2 % n1 == 0
                assert (p - 1) % n1 == 0


def test_label_is_isomorphism_exhaustive():
    c = Curve(7, 1, 0)
    cg = curve_group(c)
    g = cg.structure
    assert cg.label(None) == (0, 0)
    for P in cg.points:
        for Q in cg.points:
            assert cg.label(c.add(P, Q)) == g.add(cg.label(P), cg.label(Q))
    for x in g.elements():
        assert cg.label(cg.point_at(x)) == x


def test_group_structure_independent_of_point_order():
    c = Curve(13, 2, 2)
    pts = c.points()
    cg1 = group_structure(pts, c)
    shuffled = list(pts)
    random.Random(5).shuffle(shuffled)
    cg2 = group_structure(shuffled, c)
    assert cg1.structure == cg2.structure
    assert cg1.points == cg2.points


def test_subgroups():
    c = Curve(7, 1, 0)
    cg = curve_group(c)
    triv = subgroup(cg, [None])
    assert triv.order == 1

    g2 = cg.generators[1]
    cyc = subgroup(cg, [g2])
    assert (cyc.structure.m, cyc.structure.n) == (1, cg.structure.n)

    full = subgroup(cg, list(cg.points))
    assert full.structure == cg.structure

    with pytest.raises(PointNotOnCurve):
        subgroup(cg, [(1, 1)])  # not on the curve


def test_subgroup_is_canonical():
    c = Curve(13, 2, 2)
    cg = curve_group(c)
    for P in cg.points:
        sub = subgroup(cg, [P])
        assert sub.structure.n % sub.structure.m == 0
