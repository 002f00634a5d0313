"""Majorization predicates, the oppositely-ordered matrix class, and
T-transform mechanics (application, inference, composition)."""

from __future__ import annotations

import numpy as np
import pytest

from conftest import random_script_l2
from ikmix import (
    DomainError,
    ParamMatrix2xN,
    TTransform,
    apply_t_transform,
    chain_majorization_verify,
    in_script_l,
    infer_t_transform_2x2,
    majorizes,
    schur_probe,
    weak_submajorizes,
    weak_supermajorizes,
)

rng = np.random.default_rng(42)


class TestPredicates:
    def test_textbook_pair(self):
        assert majorizes((4.0, 2.0), (3.0, 3.0))
        assert not majorizes((3.0, 3.0), (4.0, 2.0))

    def test_reflexive_and_permutation_invariant(self):
        v = (0.2, 0.5, 0.3)
        assert majorizes(v, v)
        assert majorizes((0.5, 0.3, 0.2), v)

    def test_total_mismatch_blocks_majorization_only(self):
        # (2,2) vs (1,1): strict dominance without equal totals
        assert not majorizes((2.0, 2.0), (1.0, 1.0))
        assert weak_submajorizes((2.0, 2.0), (1.0, 1.0))
        assert not weak_supermajorizes((2.0, 2.0), (1.0, 1.0))
        assert weak_supermajorizes((1.0, 1.0), (2.0, 2.0))

    def test_majorization_implies_both_weak_forms(self):
        # Robin-Hood construction: moving mass from a larger to a smaller
        # coordinate produces a vector the original majorizes
        for _ in range(1000):
            n = int(rng.integers(2, 6))
            b = rng.uniform(0.1, 5.0, size=n)
            a = b.copy()
            hi, lo = int(np.argmax(a)), int(np.argmin(a))
            if hi == lo:
                continue
            delta = rng.uniform(0.0, 0.5) * (a[hi] - a[lo])
            a[hi] -= delta
            a[lo] += delta
            assert majorizes(b, a)
            assert weak_supermajorizes(b, a)
            assert weak_submajorizes(b, a)

    def test_length_mismatch_rejected(self):
        with pytest.raises(DomainError):
            majorizes((1.0, 2.0), (1.0, 1.0, 1.0))


class TestParamMatrix:
    def test_positivity_enforced(self):
        with pytest.raises(DomainError):
            ParamMatrix2xN((0.5, -0.5), (1.0, 2.0))
        with pytest.raises(DomainError):
            ParamMatrix2xN((0.5, 0.5), (1.0,))

    def test_dict_round_trip(self):
        pm = ParamMatrix2xN((0.6, 0.4), (1.0, 9.0))
        assert ParamMatrix2xN.from_dict(pm.to_dict()) == pm

    def test_script_l_membership(self):
        assert in_script_l(ParamMatrix2xN((0.2, 0.8), (6.0, 2.0)))
        assert not in_script_l(ParamMatrix2xN((0.2, 0.8), (2.0, 6.0)))
        # ties count as oppositely ordered
        assert in_script_l(ParamMatrix2xN((0.5, 0.5), (2.0, 6.0)))

    def test_script_l_three_columns(self):
        assert in_script_l(ParamMatrix2xN((0.5, 0.2, 0.3), (1.0, 3.0, 2.0)))
        assert not in_script_l(ParamMatrix2xN((0.32, 0.38, 0.3), (2.2, 1.8, 2.0)))


class TestTTransform:
    def test_omega_bounds(self):
        TTransform(0.0, (1, 2))
        TTransform(1.0, (1, 2))
        with pytest.raises(DomainError):
            TTransform(-0.1, (1, 2))
        with pytest.raises(DomainError):
            TTransform(1.1, (1, 2))
        with pytest.raises(DomainError):
            TTransform(0.5, (2, 2))

    def test_dict_round_trip(self):
        t = TTransform(0.3, (1, 2))
        assert TTransform.from_dict(t.to_dict()) == t

    def test_known_product(self):
        pm = ParamMatrix2xN((0.6, 0.4), (1.0, 9.0))
        q = apply_t_transform(pm, TTransform(0.3, (1, 2)))
        np.testing.assert_allclose(q.row1, (0.46, 0.54), atol=1e-12)
        np.testing.assert_allclose(q.row2, (6.6, 3.4), atol=1e-12)

    def test_row_sums_preserved(self):
        for _ in range(1000):
            n = int(rng.integers(2, 5))
            r1 = rng.uniform(0.1, 2.0, size=n)
            r2 = rng.uniform(0.1, 5.0, size=n)
            pm = ParamMatrix2xN(tuple(r1), tuple(r2))
            i, j = rng.choice(n, size=2, replace=False) + 1
            t = TTransform(float(rng.uniform(0, 1)), (int(i), int(j)))
            q = apply_t_transform(pm, t)
            assert abs(sum(q.row1) - sum(r1)) <= 1e-14 * max(1.0, sum(r1))
            assert abs(sum(q.row2) - sum(r2)) <= 1e-14 * max(1.0, sum(r2))

    def test_output_majorized_by_input(self):
        for _ in range(1000):
            n = int(rng.integers(2, 5))
            r1 = rng.uniform(0.1, 2.0, size=n)
            r2 = rng.uniform(0.1, 5.0, size=n)
            pm = ParamMatrix2xN(tuple(r1), tuple(r2))
            i, j = rng.choice(n, size=2, replace=False) + 1
            t = TTransform(float(rng.uniform(0, 1)), (int(i), int(j)))
            q = apply_t_transform(pm, t)
            assert majorizes(pm.row1, q.row1)
            assert majorizes(pm.row2, q.row2)

    def test_pair_indices_validated_at_apply(self):
        pm = ParamMatrix2xN((0.6, 0.4), (1.0, 9.0))
        with pytest.raises(DomainError):
            apply_t_transform(pm, TTransform(0.5, (1, 3)))

    def test_same_pair_composition_is_single_transform(self):
        # omega'' = w*w' + (1-w)*(1-w') for two transforms on one pair
        pm = ParamMatrix2xN((0.5, 0.2, 0.3), (1.0, 3.0, 2.0))
        w1, w2 = 0.85, 0.6
        q = apply_t_transform(apply_t_transform(pm, TTransform(w1, (1, 3))),
                              TTransform(w2, (1, 3)))
        combined = w1 * w2 + (1 - w1) * (1 - w2)
        q_direct = apply_t_transform(pm, TTransform(combined, (1, 3)))
        np.testing.assert_allclose(q.row1, q_direct.row1, atol=1e-14)
        np.testing.assert_allclose(q.row2, q_direct.row2, atol=1e-14)


class TestInference:
    def test_round_trip(self):
        for _ in range(300):
            r1, r2 = random_script_l2(rng)
            pm = ParamMatrix2xN(r1, r2)
            w = float(rng.uniform(0, 1))
            q = apply_t_transform(pm, TTransform(w, (1, 2)))
            t = infer_t_transform_2x2(pm, q)
            assert t is not None
            assert abs(t.omega - w) <= 1e-12
            q2 = apply_t_transform(pm, t)
            np.testing.assert_allclose(q2.row1, q.row1, atol=1e-12)
            np.testing.assert_allclose(q2.row2, q.row2, atol=1e-12)

    def test_rejects_non_transform(self):
        pm = ParamMatrix2xN((0.6, 0.4), (1.0, 9.0))
        q = ParamMatrix2xN((0.46, 0.54), (6.6, 3.5))  # row2 sum broken
        assert infer_t_transform_2x2(pm, q) is None

    def test_identity_recovered(self):
        pm = ParamMatrix2xN((0.6, 0.4), (1.0, 9.0))
        t = infer_t_transform_2x2(pm, pm)
        assert t is not None and abs(t.omega - 1.0) <= 1e-12


class TestScriptLStability:
    def test_products_scale_by_squared_lever(self):
        # for 2 columns the pairwise product picks up a factor (2w-1)^2,
        # so membership in the class survives any single T-transform
        for _ in range(200):
            r1, r2 = random_script_l2(rng)
            pm = ParamMatrix2xN(r1, r2)
            w = float(rng.uniform(0, 1))
            q = apply_t_transform(pm, TTransform(w, (1, 2)))
            before = (r1[0] - r1[1]) * (r2[0] - r2[1])
            after = ((q.row1[0] - q.row1[1]) * (q.row2[0] - q.row2[1]))
            np.testing.assert_allclose(after, (2 * w - 1) ** 2 * before,
                                       rtol=1e-10, atol=1e-15)
            assert in_script_l(q)

    def test_three_column_escape(self):
        # with three columns a transform can break the opposite ordering
        # of an untouched pair, which is what the staged checker patrols
        pm = ParamMatrix2xN((0.5, 0.2, 0.3), (1.0, 3.0, 2.0))
        assert in_script_l(pm)
        out = apply_t_transform(pm, TTransform(0.4, (1, 2)))
        np.testing.assert_allclose(out.row1, (0.32, 0.38, 0.3), atol=1e-15)
        np.testing.assert_allclose(out.row2, (2.2, 1.8, 2.0), atol=1e-15)
        assert not in_script_l(out)
        stay = apply_t_transform(pm, TTransform(0.9, (1, 2)))
        np.testing.assert_allclose(stay.row1, (0.47, 0.23, 0.3), atol=1e-15)
        np.testing.assert_allclose(stay.row2, (1.2, 2.8, 2.0), atol=1e-15)
        assert in_script_l(stay)


class TestChainVerify:
    def test_two_step_chain(self):
        pm = ParamMatrix2xN((0.5, 0.2, 0.3), (1.0, 3.0, 2.0))
        ts = (TTransform(0.9, (1, 2)), TTransform(0.7, (2, 3)))
        q = apply_t_transform(apply_t_transform(pm, ts[0]), ts[1])
        np.testing.assert_allclose(q.row1, (0.47, 0.251, 0.279), atol=1e-15)
        np.testing.assert_allclose(q.row2, (1.2, 2.56, 2.24), atol=1e-15)
        assert chain_majorization_verify(pm, q, ts)
        assert not chain_majorization_verify(pm, q, ts[:1])

    def test_empty_chain_requires_equality(self):
        pm = ParamMatrix2xN((0.6, 0.4), (1.0, 9.0))
        assert chain_majorization_verify(pm, pm, ())


class TestSchurProbe:
    def test_convex_surrogate(self):
        f = lambda v: float(np.sum(np.square(v)))
        assert schur_probe(f, (0.7, 0.3), (0.5, 0.5))
        assert schur_probe(f, (0.5, 0.5), (0.5, 0.5))

    def test_requires_majorization(self):
        with pytest.raises(DomainError):
            schur_probe(lambda v: 0.0, (0.5, 0.5), (0.7, 0.3))

    def test_detects_violation(self):
        g = lambda v: -float(np.sum(np.square(v)))  # Schur-concave
        assert not schur_probe(g, (0.9, 0.1), (0.5, 0.5))
