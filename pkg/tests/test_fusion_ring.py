import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuscat import fusion_ring, groups
from fuscat.fusion_ring import (
    FusionRingData,
    RingDataError,
    build_ring,
    enumerate_subcategories,
    fp_dims,
    ring_from_dict,
    ring_to_dict,
    subcategory_closure,
    subcategory_join,
    subcategory_meet,
    subcategory_product,
    validate,
)


class TestValidate:
    def test_trivial_ring_ok(self, trivial_ring):
        assert validate(trivial_ring) == []

    def test_rep_s3_ok(self, s3_ring):
        # oracle: products of the classical S3 characters decompose as
        # sgn*sgn = 1, sgn*rho = rho, rho*rho = 1 + sgn + rho
        assert validate(s3_ring) == []
        assert s3_ring.N[2, 2].tolist() == [1, 1, 1]

    def test_unit_axiom_violation(self):
        N = np.zeros((2, 2, 2), dtype=int)
        N[0] = np.eye(2, dtype=int)
        N[:, 0] = np.eye(2, dtype=int)
        N[0, 1, 1] = 0  # break the unit axiom
        N[1, 1, 0] = 1
        bad = FusionRingData(("1", "x"), N, (0, 1), np.ones(2), 2.0)
        violations = validate(bad)
        assert any("unit axiom" in v for v in violations)

    def test_build_rejects_bad_dual(self):
        N = np.zeros((2, 2, 2), dtype=int)
        N[0] = np.eye(2, dtype=int)
        N[:, 0] = np.eye(2, dtype=int)
        N[1, 1, 0] = 1
        with pytest.raises(RingDataError):
            build_ring(["1", "x"], N, [1, 0])  # dual(0) != 0


class TestFpDims:
    def test_pointed_ring_dims_all_one(self, vec_s3_ring):
        assert np.allclose(vec_s3_ring.dims, 1.0)
        assert abs(vec_s3_ring.global_dim - 6) < 1e-9

    def test_rep_s3(self, s3_ring):
        dims, gd = fp_dims(s3_ring.N)
        assert np.allclose(dims, [1, 1, 2])
        assert abs(gd - 6) < 1e-9

    def test_rep_c2(self, rep_c2_ring):
        assert np.allclose(rep_c2_ring.dims, [1, 1])
        assert abs(rep_c2_ring.global_dim - 2) < 1e-9


class TestClosure:
    def test_empty_seed(self, s3_ring):
        assert subcategory_closure(s3_ring, []).indices == (0,)

    def test_sgn_generates_rep_c2(self, s3_ring):
        assert subcategory_closure(s3_ring, [1]).indices == (0, 1)

    def test_rho_generates_everything(self, s3_ring):
        assert subcategory_closure(s3_ring, [2]).indices == (0, 1, 2)


class TestEnumerate:
    def test_rep_c2(self, rep_c2_ring):
        subs = enumerate_subcategories(rep_c2_ring)
        assert [S.indices for S in subs] == [(0,), (0, 1)]

    def test_rep_s3(self, s3_ring):
        subs = enumerate_subcategories(s3_ring)
        assert [S.indices for S in subs] == [(0,), (0, 1), (0, 1, 2)]
        assert [round(S.fpdim) for S in subs] == [1, 2, 6]

    def test_vec_s3_has_six(self, vec_s3_ring):
        subs = enumerate_subcategories(vec_s3_ring)
        assert len(subs) == 6
        assert sorted(len(S.indices) for S in subs) == [1, 2, 2, 2, 3, 6]

    def test_lattice_closed_under_meet_join(self, vec_s3_ring):
        subs = enumerate_subcategories(vec_s3_ring)
        keys = {S.indices for S in subs}
        for A in subs:
            for B in subs:
                assert subcategory_meet(A, B).indices in keys
                assert subcategory_join(A, B).indices in keys

    def test_fpdim_ratio_at_least_one(self, vec_s3_ring):
        for S in enumerate_subcategories(vec_s3_ring):
            assert vec_s3_ring.global_dim / S.fpdim >= 1 - 1e-9


class TestMeetJoinProduct:
    def test_idempotence(self, s3_ring):
        for S in enumerate_subcategories(s3_ring):
            assert subcategory_meet(S, S).indices == S.indices
            assert subcategory_join(S, S).indices == S.indices

    def _order_two_subcats(self, vec_s3_ring):
        subs = enumerate_subcategories(vec_s3_ring)
        return [S for S in subs if len(S.indices) == 2]

    def test_vec_s3_reflections_generate(self, vec_s3_ring):
        pair = self._order_two_subcats(vec_s3_ring)[:2]
        assert subcategory_join(pair[0], pair[1]).indices == tuple(range(6))
        assert subcategory_meet(pair[0], pair[1]).indices == (0,)

    def test_vec_s3_coset_product_not_closed(self, vec_s3_ring):
        pair = self._order_two_subcats(vec_s3_ring)[:2]
        prod_ab, closed_ab = subcategory_product(pair[0], pair[1])
        prod_ba, closed_ba = subcategory_product(pair[1], pair[0])
        assert len(prod_ab) == 4 and not closed_ab
        assert len(prod_ba) == 4 and not closed_ba
        assert prod_ab != prod_ba

    def test_product_with_trivial(self, s3_ring):
        subs = enumerate_subcategories(s3_ring)
        triv = subs[0]
        for S in subs:
            prod, closed = subcategory_product(S, triv)
            assert prod == S.indices and closed

    def test_rep_s3_product_closed(self, s3_ring):
        rep_c2 = subcategory_closure(s3_ring, [1])
        prod, closed = subcategory_product(rep_c2, rep_c2)
        assert prod == (0, 1) and closed

    def test_product_inside_join(self, vec_s3_ring):
        subs = enumerate_subcategories(vec_s3_ring)
        for A in subs:
            for B in subs:
                prod, _ = subcategory_product(A, B)
                assert set(prod) <= set(subcategory_join(A, B).indices)

    def test_commutative_ring_products_symmetric(self, s3_ring):
        subs = enumerate_subcategories(s3_ring)
        assert s3_ring.commutative
        for A in subs:
            for B in subs:
                assert subcategory_product(A, B) == subcategory_product(B, A)


class TestJson:
    def test_roundtrip(self, s3_ring):
        ring2 = ring_from_dict(ring_to_dict(s3_ring))
        assert np.array_equal(ring2.N, s3_ring.N)
        assert ring2.dual == s3_ring.dual
        assert np.allclose(ring2.dims, s3_ring.dims)

    def test_missing_field(self):
        with pytest.raises(RingDataError):
            ring_from_dict({"labels": ["1"]})

    def test_non_integer_entries(self):
        with pytest.raises(RingDataError):
            ring_from_dict({"labels": ["1"], "dual": [0], "N": [[[1.5]]]})


@given(st.integers(min_value=1, max_value=8))
@settings(max_examples=8, deadline=None)
def test_cyclic_vec_ring_subcategories_match_divisors(n):
    # subgroups of a cyclic group = divisors of n
    G = groups.parse_group(f"cyclic:{n}")
    ring = groups.vec_fusion_ring(G)
    subs = enumerate_subcategories(ring)
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    assert sorted(len(S.indices) for S in subs) == divisors
