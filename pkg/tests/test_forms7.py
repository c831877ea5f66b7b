"""Canonical representatives, orbit invariants, and the classifier."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from msf7.exterior import KForm, LinearMap, pullback, signature
from msf7.forms7 import (
    NON_MULTISYMPLECTIC,
    b_form,
    b_signature,
    canonical,
    classify,
    compact_dim,
    contraction_matrix,
    invariant_vector,
    is_multisymplectic,
    ms_rank,
    sample_orbit,
    stabilizer_algebra,
    stabilizer_dim,
    _classifier_table,
)
from msf7.stabilizers import in_matrix_span


def alpha(*idx):
    return KForm.monomial(idx)


class TestCanonical:
    def test_orbit8_prints_exactly_seven_terms(self):
        w8 = canonical(8).form
        assert len(w8.terms) == 7
        assert w8.coefficient((1, 2, 3)) == 1
        assert w8.coefficient((1, 6, 7)) == -1
        assert w8.coefficient((3, 5, 6)) == -1

    def test_orbit2_alternate_has_six_terms_in_second_basis(self):
        cf = canonical(2, "prime")
        assert cf.source_basis == "beta"
        assert len(cf.form.terms) == 6
        assert cf.form.coefficient((1, 4, 5)) == 1
        assert cf.form.coefficient((3, 5, 6)) == -1

    @pytest.mark.parametrize("orbit", [2, 5, 6, 7])
    def test_alternates_reachable_by_stored_map(self, orbit):
        cf = canonical(orbit, "prime")
        assert cf.change_of_basis is not None
        assert cf.change_of_basis.is_invertible()
        assert pullback(cf.change_of_basis, canonical(orbit).form) == cf.form

    @pytest.mark.parametrize("orbit", [1, 3, 4, 8])
    def test_missing_variants_rejected(self, orbit):
        with pytest.raises(ValueError, match="no prime variant"):
            canonical(orbit, "prime")

    def test_bad_ids_rejected(self):
        with pytest.raises(ValueError):
            canonical(0)
        with pytest.raises(ValueError, match="unknown variant"):
            canonical(3, "double-prime")


class TestMultisymplectic:
    @pytest.mark.parametrize("orbit", range(1, 9))
    def test_all_canonical_forms_pass(self, orbit):
        assert is_multisymplectic(canonical(orbit).form)

    def test_decomposable_form_fails(self):
        assert not is_multisymplectic(alpha(1, 2, 3))

    def test_two_block_form_fails(self):
        # e7 contracts to zero
        assert classify(alpha(1, 2, 3) + alpha(4, 5, 6)) == NON_MULTISYMPLECTIC

    def test_wrong_degree_rejected(self):
        with pytest.raises(ValueError, match="3-form"):
            is_multisymplectic(alpha(1, 2))

    def test_rank_equals_contraction_rank(self):
        w = canonical(4).form
        assert ms_rank(w) == 7
        assert len(contraction_matrix(w)) == 21


class TestBForm:
    def test_orbit8_definite(self):
        assert b_signature(canonical(8).form) == (7, 0)

    def test_orbit5_split_signature(self):
        assert b_signature(canonical(5).form) == (4, 3)

    def test_decomposable_form_has_zero_matrix(self):
        m = b_form(alpha(1, 2, 3))
        assert all(v == 0 for row in m.rows for v in row)

    def test_covariance_under_pullback(self):
        rng = random.Random(5)
        w = canonical(6).form
        B = b_form(w)
        draws = [LinearMap([[rng.randint(-2, 2) for _ in range(7)] for _ in range(7)])
                 for _ in range(12)]
        # force a singular draw into the batch
        draws.append(LinearMap.scaling(0))
        for g in draws:
            lhs = b_form(pullback(g, w))
            rhs = (g.transpose() @ LinearMap(B.rows) @ g)
            det = g.det()
            assert lhs.rows == tuple(tuple(det * x for x in row) for row in rhs.rows)


class TestStabilizer:
    def test_exceptional_dimensions(self):
        assert stabilizer_dim(canonical(8).form) == 14
        assert stabilizer_dim(canonical(5).form) == 14

    def test_all_orbits_at_least_fourteen(self):
        dims = [stabilizer_dim(canonical(i).form) for i in range(1, 9)]
        assert dims == [18, 15, 28, 21, 14, 18, 15, 14]
        assert min(dims) == 14

    def test_basis_annihilates_form(self):
        # independent check of the kernel construction: each basis matrix
        # satisfies the derivation identity on random triples
        rng = random.Random(12)
        w = canonical(5).form
        basis = stabilizer_algebra(w)
        assert len(basis) == 14
        for A in basis[:5]:
            for _ in range(5):
                u = tuple(Fraction(rng.randint(-2, 2)) for _ in range(7))
                v = tuple(Fraction(rng.randint(-2, 2)) for _ in range(7))
                x = tuple(Fraction(rng.randint(-2, 2)) for _ in range(7))
                total = (w.evaluate([A.apply(u), v, x])
                         + w.evaluate([u, A.apply(v), x])
                         + w.evaluate([u, v, A.apply(x)]))
                assert total == 0

    def test_closed_under_commutator(self):
        basis = stabilizer_algebra(canonical(8).form)
        for X in basis[:4]:
            for Y in basis[:4]:
                assert in_matrix_span(basis, (X @ Y) - (Y @ X))

    def test_dimension_is_conjugation_invariant(self):
        rng = random.Random(3)
        for orbit in (1, 5, 8):
            w = canonical(orbit).form
            d = stabilizer_dim(w)
            for _ in range(3):
                g, _ = _random_invertible(rng)
                assert stabilizer_dim(pullback(g, w)) == d


def _random_invertible(rng):
    while True:
        g = LinearMap([[rng.randint(-3, 3) for _ in range(7)] for _ in range(7)])
        if g.is_invertible():
            return g, None


class TestCompactDim:
    def test_preferred_representative_dimensions(self):
        reps = [canonical(1).form, canonical(2, "prime").form, canonical(3).form,
                canonical(4).form, canonical(5).form, canonical(6).form,
                canonical(7).form, canonical(8).form]
        assert [compact_dim(w) for w in reps] == [2, 2, 9, 3, 6, 4, 6, 14]


class TestClassifier:
    def test_round_trip_on_canonical_forms(self):
        for i in range(1, 9):
            assert classify(canonical(i).form) == i

    def test_table_separates_without_fallback(self):
        table, extended = _classifier_table()
        assert len(table) == 8
        assert not extended

    def test_invariant_vector_of_orbit8(self):
        iv = invariant_vector(canonical(8).form)
        assert (iv.ms_rank, iv.b_rank, iv.b_signature, iv.stab_dim,
                iv.compact_dim) == (7, 7, (7, 0), 14, 14)
        assert iv.to_json() == {"ms_rank": 7, "b_rank": 7, "b_sig": [7, 0],
                                "stab_dim": 14}

    def test_fuzz_smoke(self):
        for orbit in range(1, 9):
            for seed in (1, 2):
                w, g = sample_orbit(orbit, seed)
                assert classify(w) == orbit

    def test_degree_checked(self):
        with pytest.raises(ValueError):
            classify(alpha(1, 2))


class TestSampleOrbit:
    def test_deterministic_per_seed(self):
        a1, g1 = sample_orbit(3, 987654321)
        a2, g2 = sample_orbit(3, 987654321)
        assert a1 == a2 and g1 == g2

    def test_distinct_seeds_differ(self):
        a1, _ = sample_orbit(3, 1)
        a2, _ = sample_orbit(3, 2)
        assert a1 != a2

    def test_witness_is_invertible_and_consistent(self):
        w, g = sample_orbit(6, 42)
        assert g.det() != 0
        assert pullback(g, canonical(6).form) == w
        assert all(abs(x) <= 3 for row in g.rows for x in row)

    def test_orbit_range_checked(self):
        with pytest.raises(ValueError):
            sample_orbit(9, 0)
