import json
import random
from fractions import Fraction as F
from itertools import permutations

import pytest

from qschroeder.errors import DomainError, RejectedParamsError
from qschroeder.schroeder import Params, gen_a, reference_prefix
from qschroeder.verifier import (REGISTRY, SamplePlan, hankel_det, jfraction_hankel_check,
                                 sample_points, verify_all, verify_identity)

LITTLE = reference_prefix("little-schroeder")


def cofactor_det(m):
    """Leibniz/Laplace determinant, independent of the elimination code."""
    n = len(m)
    if n == 0:
        return F(1)
    if n == 1:
        return m[0][0]
    total = F(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def leibniz_det(m):
    n = len(m)
    total = F(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(1)
        for i in range(n):
            term *= m[i][perm[i]]
        total += (-1) ** inversions * term
    return total


def hankel_matrix(seq, n, offset=0):
    return [[F(seq[i + j + offset]) for j in range(n)] for i in range(n)]


def test_hankel_examples():
    assert hankel_det(LITTLE, 2) == cofactor_det([[1, 1], [1, 3]]) == 2
    assert hankel_det(LITTLE, 3) == cofactor_det(hankel_matrix(LITTLE, 3)) == 8
    assert hankel_det([F(4, 9), 5, 6], 1, offset=0) == F(4, 9)
    assert hankel_det([1, 2, 3, 7], 1, offset=2) == 3


def test_hankel_insufficient_terms():
    with pytest.raises(DomainError):
        hankel_det([1, 1, 3], 3)


def test_hankel_against_cofactor_on_random_sequences():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 4)
        offset = rng.randint(0, 2)
        seq = [F(rng.randint(-6, 6), rng.randint(1, 4)) if rng.random() < 0.8 else F(0)
               for _ in range(2 * n - 1 + offset)]
        m = hankel_matrix(seq, n, offset)
        assert hankel_det(seq, n, offset) == cofactor_det(m) == leibniz_det(m)


def test_hankel_zero_pivot_needs_row_swap():
    seq = [0, 1, 0, 2, 5]
    assert hankel_det(seq, 3) == cofactor_det(hankel_matrix(seq, 3))
    assert hankel_det([0, 0, 0, 0, 0], 3) == 0


def test_verify_eq_2_2():
    report = verify_identity("eq-2.2", Params.rational(F(1, 2), 1, 1, 16))
    assert report.passed and report.verdict == "pass"


def test_verify_eq_3_6_rhs():
    q = F(1, 3)
    report = verify_identity("eq-3.6", Params.rational(q, 7, 7, 12))
    assert report.passed
    pt = report.points[0]
    assert (pt.params.x, pt.params.y) == (q, -q)
    series = REGISTRY["eq-3.6"].build(pt.params)
    assert list(series[-1].coeffs) == [(-1) ** n * q ** (n * (n + 1) // 2) for n in range(13)]


def test_eq_2_10_split():
    q = F(1, 2)
    p = Params.rational(q, q, -q)
    with pytest.raises(RejectedParamsError):
        verify_identity("eq-2.10", p)
    assert verify_identity("eq-2.10h", p).passed


def test_unknown_identity():
    with pytest.raises(DomainError):
        verify_identity("eq-9.99", Params.rational(F(1, 2), 1, 1))


def test_small_order_plan_passes():
    reports = verify_all(SamplePlan(seed=3, points=2, N=4))
    assert [r.id for r in reports] == list(REGISTRY)
    assert all(r.passed for r in reports)


def test_corrupted_entry_is_detected_at_order_three():
    p = Params.rational(F(2, 3), 2, F(1, 2), 8)
    for id in ("eq-2.2", "eq-2.17", "cf-3.8"):
        report = verify_identity(id, p, corrupt_at=3)
        assert not report.passed
        assert report.points[0].mismatch_order == 3


def test_known_false_identity_fails_everywhere():
    plan = SamplePlan(points=5, N=8)
    report = verify_all(plan, ids=["false-F"])[0]
    assert len(report.points) == 5
    assert not any(pt.passed for pt in report.points)


def test_determinism():
    plan = SamplePlan(seed=99, points=3, N=6)
    ids = ["eq-2.4", "eq-2.26", "cf-jacobi", "hankel-jfraction"]
    a = json.dumps([r.to_json() for r in verify_all(plan, ids)])
    b = json.dumps([r.to_json() for r in verify_all(plan, ids)])
    assert a == b


def test_sample_points_respect_constraints():
    plan = SamplePlan(points=50, N=6)
    pts = sample_points(REGISTRY["eq-2.10"], plan)
    assert len(pts) == 50
    assert all(p.x + p.y != 0 for p in pts)
    assert all(p.q not in (0, 1, -1) for p in pts)
    fixed = sample_points(REGISTRY["eq-1.2"], plan)
    assert fixed == [Params.rational(1, 1, 1, 6)]


def test_degenerate_pool_rejected():
    with pytest.raises(DomainError):
        SamplePlan(q_pool=(F(1, 2), F(-1)))


def test_report_json_schema():
    report = verify_identity("eq-2.13", Params.rational(F(1, 2), 2, 3, 6), corrupt_at=1)
    doc = report.to_json()
    assert doc["id"] == "eq-2.13" and doc["verdict"] == "fail"
    (pt,) = doc["points"]
    assert set(pt) == {"q", "x", "y", "N", "pass", "mismatch_order", "lhs", "rhs"}
    assert pt["q"] == "1/2" and pt["N"] == 6 and pt["mismatch_order"] == 1
    ok = verify_identity("eq-2.13", Params.rational(F(1, 2), 2, 3, 6)).to_json()
    assert set(ok["points"][0]) == {"q", "x", "y", "N", "pass"}


def test_jfraction_hankel_examples():
    report = jfraction_hankel_check(Params.rational(1, 1, 1), 5)
    assert report.passed
    dets = [hankel_det(LITTLE, n) for n in range(1, 6)]
    assert dets == [cofactor_det(hankel_matrix(LITTLE, n)) for n in range(1, 6)]
    assert dets == [2 ** (n * (n - 1) // 2) for n in range(1, 6)]
    assert jfraction_hankel_check(Params.rational(F(1, 2), 1, 1), 4).passed
    assert jfraction_hankel_check(Params.rational(F(1, 2), 1, 1), 1).passed


def test_jfraction_hankel_direct_determinants_at_half():
    p = Params.rational(F(1, 2), 1, 1)
    a = gen_a(6, p)
    q = p.q
    lam = [q ** (3 * (k - 1)) * (1 + q**k) for k in range(1, 4)]
    for n in range(1, 5):
        expected = F(1)
        for k in range(1, n):
            expected *= lam[k - 1] ** (n - k)
        assert cofactor_det(hankel_matrix(a, n)) == expected


def test_jfraction_hankel_rejects_vanishing_lambda():
    with pytest.raises(RejectedParamsError):
        jfraction_hankel_check(Params.rational(F(1, 2), 1, 0), 3)
