"""Canonical multisymplectic representatives, orbit invariants, classifier.

The eight orbit representatives are stored with their printed coefficients.
Orbit 2 also carries the rational change of basis to its six-term variant
(the square roots in the intermediate basis cancel once the first three
vectors are halved, so the stored matrix is exactly rational).  Orbits 5, 6
and 7 carry alternate representatives: orbit 5 the algebra-derived variant
used alongside orbit 2, orbits 6 and 7 the representatives obtained through
the published basis-change maps.

The classifier key is (rank of the contraction map, rank and unordered
signature of the induced bilinear form, stabilizer dimension); the key table
is built from the canonical forms on first use and refuses to classify if it
fails to separate the orbits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import algebras
from .exterior import (
    DIM,
    KForm,
    LinearMap,
    SymmetricMatrix,
    basis_vector,
    interior,
    kernel,
    pullback,
    rank,
    signature,
    wedge,
)

ORBIT_IDS = (1, 2, 3, 4, 5, 6, 7, 8)

_ORBIT_TERMS = {
    1: [((1, 2, 7), 1), ((1, 3, 4), 1), ((2, 5, 6), 1)],
    2: [((1, 2, 5), 1), ((1, 2, 7), 1), ((1, 4, 7), 1),
        ((2, 3, 7), -1), ((3, 4, 7), 1), ((3, 4, 6), 1)],
    3: [((1, 2, 3), 1), ((1, 6, 7), -1), ((1, 4, 5), 1)],
    4: [((1, 2, 5), 1), ((1, 3, 6), 1), ((1, 4, 7), 1), ((2, 3, 4), 1)],
    5: [((1, 2, 3), 1), ((1, 4, 5), -1), ((1, 6, 7), 1),
        ((2, 4, 6), 1), ((2, 5, 7), 1), ((3, 4, 7), 1), ((3, 5, 6), -1)],
    6: [((1, 2, 3), 1), ((1, 4, 5), -1), ((1, 6, 7), 1),
        ((2, 4, 6), -1), ((2, 5, 7), -1)],
    7: [((1, 4, 5), 1), ((1, 6, 7), -1), ((2, 4, 6), 1),
        ((2, 5, 7), 1), ((3, 4, 7), 1), ((3, 5, 6), -1)],
    8: [((1, 2, 3), 1), ((1, 4, 5), 1), ((1, 6, 7), -1),
        ((2, 4, 6), 1), ((2, 5, 7), 1), ((3, 4, 7), 1), ((3, 5, 6), -1)],
}

_ORBIT_TERMS_2PRIME = [((1, 4, 5), 1), ((1, 6, 7), -1), ((2, 5, 7), 1),
                       ((2, 4, 6), -1), ((3, 4, 7), -1), ((3, 5, 6), -1)]

# Change of basis carrying the 6-term representative of orbit 2 to its
# printed alternate: columns are the new basis vectors in old coordinates.
# The published intermediate basis has 1/sqrt(2) factors on the last four
# vectors; halving the first three instead yields the same 3-form with all
# entries rational.
_BASIS_CHANGE_2 = LinearMap.from_cols([
    [0, 0, 0, 0, Fraction(1, 2), Fraction(1, 2), 0],
    [0, 0, 0, 0, Fraction(-1, 2), Fraction(1, 2), 0],
    [0, 0, 0, 0, Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)],
    [-1, 0, 0, -1, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [0, -1, -1, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0],
])

# Published map relating the six-term orbit-6 representative to the one used
# in the original classification: e3 -> -e7, e7 -> e3, e5 -> -e5, e6 -> -e6.
BASIS_MAP_6 = LinearMap.from_images({
    3: [0, 0, 0, 0, 0, 0, -1],
    7: [0, 0, 1, 0, 0, 0, 0],
    5: [0, 0, 0, 0, -1, 0, 0],
    6: [0, 0, 0, 0, 0, -1, 0],
})

# Same for orbit 7: e1->-e4, e2->-e7, e3->e5, e4->-e6, e5->e3, e6->-e1, e7->e2.
BASIS_MAP_7 = LinearMap.from_cols([
    [0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, -1, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
])


@dataclass(frozen=True)
class CanonicalForm:
    orbit_id: int
    variant: str
    form: KForm
    source_basis: str
    change_of_basis: LinearMap | None  # pullback(change, standard) == this form


def _split_variant_change() -> LinearMap:
    """Invertible map with pullback(map, orbit-5 standard) = orbit-5 prime.

    Both sides are induced forms of the split octonions built over the split
    quaternions, for two different imaginary bases; the matrix expresses one
    basis in the other's coordinates, with a global sign to absorb the odd
    degree.
    """
    t = algebras.build_algebra("Osplit_from_Hsplit")
    b_standard = _PSEUDO_OCT_BASIS(t)
    b_prime = _PSEUDO_OCT_PRIME_BASIS(t)
    # coordinates of the prime basis in the standard one
    express = _lift_inverse(b_standard, t)
    return LinearMap.from_cols([express(b) for b in b_prime])


def _lift_inverse(basis, t):
    """Return a function expressing imaginary elements in the given 7-element
    imaginary basis (exact solve)."""
    rows = [[basis[j].coords[i] for j in range(7)] for i in range(t.dim)]

    def express(x):
        aug = [row[:] + [x.coords[i]] for i, row in enumerate(rows)]
        ker = kernel([r[:7] + [-r[7]] for r in aug])
        for v in ker:
            if v[7] != 0:
                return tuple(c / v[7] for c in v[:7])
        raise ValueError("element not in the span of the basis")

    return express


def _PSEUDO_OCT_BASIS(t):
    """Imaginary basis of the doubled split quaternions inducing the printed
    orbit-5 representative: (i,0),(0,1),(0,i),(j,0),(k,0),(0,j),(0,k)."""
    z4 = [0, 0, 0, 0]

    def pair(a, b):
        return t.element(list(a) + list(b))

    one = [1, 0, 0, 0]
    i = [0, 1, 0, 0]
    j = [0, 0, 1, 0]
    k = [0, 0, 0, 1]
    return [pair(i, z4), pair(z4, one), pair(z4, i),
            pair(j, z4), pair(k, z4), pair(z4, j), pair(z4, k)]


def _PSEUDO_OCT_PRIME_BASIS(t):
    """Imaginary basis inducing the orbit-5 variant that equals the six-term
    orbit-2 alternate plus the volume form of the first three covectors.

    This is the conjugate of the published display list {i, j, k, e, ei, ej,
    ek} (e the doubling unit, products taken in the algebra): conjugation
    negates the first four elements and cancels the sign the left products
    carry on the last three.  Verified exactly against the printed identity.
    """
    z4 = [0, 0, 0, 0]

    def pair(a, b):
        return t.element(list(a) + list(b))

    one = [1, 0, 0, 0]
    i = [0, 1, 0, 0]
    j = [0, 0, 1, 0]
    k = [0, 0, 0, 1]
    basis = [-pair(i, z4), -pair(j, z4), -pair(k, z4), -pair(z4, one),
             pair(z4, i), pair(z4, j), pair(z4, k)]
    return basis


_CANONICAL_CACHE: dict[tuple[int, str], CanonicalForm] = {}


def canonical(orbit_id: int, variant: str = "standard") -> CanonicalForm:
    """Exact canonical representative for an orbit.

    variant "standard" exists for all eight orbits; "prime" for orbits 2, 5,
    6 and 7 (the alternates the classification works with).  The stored
    change-of-basis map carries the standard form to the variant by pullback.
    """
    if orbit_id not in ORBIT_IDS:
        raise ValueError(f"orbit id must be 1..8, got {orbit_id}")
    key = (orbit_id, variant)
    if key in _CANONICAL_CACHE:
        return _CANONICAL_CACHE[key]
    if variant == "standard":
        cf = CanonicalForm(orbit_id, "standard",
                           KForm.from_terms(3, _ORBIT_TERMS[orbit_id]), "e", None)
    elif variant == "prime":
        if orbit_id == 2:
            cf = CanonicalForm(2, "prime", KForm.from_terms(3, _ORBIT_TERMS_2PRIME),
                               "beta", _BASIS_CHANGE_2)
        elif orbit_id == 5:
            change = _split_variant_change()
            cf = CanonicalForm(5, "prime", pullback(change, canonical(5).form),
                               "beta", change)
        elif orbit_id == 6:
            change = BASIS_MAP_6.inverse()
            cf = CanonicalForm(6, "prime", pullback(change, canonical(6).form),
                               "e", change)
        elif orbit_id == 7:
            change = BASIS_MAP_7.inverse()
            cf = CanonicalForm(7, "prime", pullback(change, canonical(7).form),
                               "e", change)
        else:
            raise ValueError(f"orbit {orbit_id} has no prime variant")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    _CANONICAL_CACHE[key] = cf
    return cf


# --- invariants ---------------------------------------------------------------

def _require_3form(w: KForm) -> None:
    if w.degree != 3:
        raise ValueError(f"expected a 3-form, got degree {w.degree}")


def contraction_matrix(w: KForm) -> list[list[Fraction]]:
    """21 x 7 matrix of v -> interior(v, w) in the pair basis of 2-forms."""
    _require_3form(w)
    pairs = list(combinations(range(1, DIM + 1), 2))
    return [[w.coefficient((j, p, q)) for j in range(1, DIM + 1)] for (p, q) in pairs]


def ms_rank(w: KForm) -> int:
    return rank(contraction_matrix(w))


def is_multisymplectic(w: KForm) -> bool:
    """True iff v -> w(v, -, -) is injective."""
    return ms_rank(w) == DIM


def b_form(w: KForm) -> SymmetricMatrix:
    """B(u, v) defined by interior(u,w) ^ interior(v,w) ^ w = B(u,v) vol."""
    _require_3form(w)
    vol_idx = tuple(range(1, DIM + 1))
    ivw = [interior(basis_vector(i), w) for i in range(1, DIM + 1)]
    rows = [[Fraction(0)] * DIM for _ in range(DIM)]
    for i in range(DIM):
        for j in range(i, DIM):
            c = wedge(wedge(ivw[i], ivw[j]), w).terms.get(vol_idx, Fraction(0))
            rows[i][j] = rows[j][i] = c
    return SymmetricMatrix(rows)


def b_signature(w: KForm) -> tuple[int, int]:
    """Unordered signature (max, min) of the induced bilinear form; only the
    unordered pair is orbit-invariant because pullback rescales by det."""
    p, n, _ = signature(b_form(w))
    return (max(p, n), min(p, n))


def _stabilizer_system(w: KForm) -> list[list[Fraction]]:
    """35 x 49 system for w(Au,v,x)+w(u,Av,x)+w(u,v,Ax) = 0; unknown A[m][p]
    flattened as m*7 + p."""
    _require_3form(w)
    rows = []
    for (p, q, r) in combinations(range(1, DIM + 1), 3):
        row = [Fraction(0)] * (DIM * DIM)
        for m in range(1, DIM + 1):
            row[(m - 1) * DIM + (p - 1)] += w.coefficient((m, q, r))
            row[(m - 1) * DIM + (q - 1)] += w.coefficient((p, m, r))
            row[(m - 1) * DIM + (r - 1)] += w.coefficient((p, q, m))
        rows.append(row)
    return rows


def stabilizer_algebra(w: KForm) -> list[LinearMap]:
    """Exact basis of the annihilating matrix Lie algebra of w."""
    basis = kernel(_stabilizer_system(w))
    return [LinearMap([[v[m * DIM + p] for p in range(DIM)] for m in range(DIM)])
            for v in basis]


def stabilizer_dim(w: KForm) -> int:
    return len(kernel(_stabilizer_system(w)))


def compact_dim(w: KForm) -> int:
    """Dimension of the stabilizer algebra intersected with the antisymmetric
    matrices, via one joint kernel computation.  Only meaningful at the
    preferred representatives (the intersection is basis dependent)."""
    rows = _stabilizer_system(w)
    for m in range(DIM):
        for p in range(m, DIM):
            row = [Fraction(0)] * (DIM * DIM)
            row[m * DIM + p] += 1
            row[p * DIM + m] += 1
            rows.append(row)
    return len(kernel(rows))


def lambda5_rank(w: KForm) -> int:
    """Rank of v -> interior(v, w) ^ w as a map into 5-forms (fallback orbit
    invariant, only consulted if the primary key table collides)."""
    fives = list(combinations(range(1, DIM + 1), 5))
    cols = []
    for i in range(1, DIM + 1):
        f = wedge(interior(basis_vector(i), w), w)
        cols.append([f.terms.get(t, Fraction(0)) for t in fives])
    return rank([[cols[j][t] for j in range(DIM)] for t in range(len(fives))])


@dataclass(frozen=True)
class InvariantVector:
    ms_rank: int
    b_rank: int
    b_signature: tuple[int, int]
    stab_dim: int
    compact_dim: int

    def to_json(self) -> dict:
        # wire format carries only the representative-independent fields
        return {"ms_rank": self.ms_rank, "b_rank": self.b_rank,
                "b_sig": list(self.b_signature), "stab_dim": self.stab_dim}


def invariant_vector(w: KForm) -> InvariantVector:
    _require_3form(w)
    p, n, _ = signature(b_form(w))
    return InvariantVector(
        ms_rank=ms_rank(w),
        b_rank=p + n,
        b_signature=(max(p, n), min(p, n)),
        stab_dim=stabilizer_dim(w),
        compact_dim=compact_dim(w),
    )


NON_MULTISYMPLECTIC = "NonMultisymplectic"
UNKNOWN = "Unknown"


class ClassifierTableError(RuntimeError):
    """Raised if the invariant table fails to separate the eight orbits."""


def _classifier_key(w: KForm, extended: bool) -> tuple:
    p, n, _ = signature(b_form(w))
    key = (p + n, (max(p, n), min(p, n)), stabilizer_dim(w))
    if extended:
        key = key + (lambda5_rank(w),)
    return key


_TABLE: dict | None = None
_TABLE_EXTENDED = False


def _classifier_table() -> tuple[dict, bool]:
    global _TABLE, _TABLE_EXTENDED
    if _TABLE is not None:
        return _TABLE, _TABLE_EXTENDED
    for extended in (False, True):
        table = {}
        collision = False
        for i in ORBIT_IDS:
            key = _classifier_key(canonical(i).form, extended)
            if key in table:
                collision = True
                break
            table[key] = i
        if not collision:
            _TABLE, _TABLE_EXTENDED = table, extended
            return table, extended
    raise ClassifierTableError(
        "invariant table does not separate the eight orbits; refusing to classify")


def classify(w: KForm):
    """Orbit id (1..8), NON_MULTISYMPLECTIC, or UNKNOWN.

    Uses only invariants that are constant along orbits; the dimension of the
    compact part is excluded because it depends on the representative.
    """
    _require_3form(w)
    if ms_rank(w) < DIM:
        return NON_MULTISYMPLECTIC
    table, extended = _classifier_table()
    return table.get(_classifier_key(w, extended), UNKNOWN)


def random_invertible(rng: random.Random, spread: int = 3, max_tries: int = 100) -> LinearMap:
    """Pseudorandom invertible integer matrix, entries uniform in [-spread, spread]."""
    for _ in range(max_tries):
        g = LinearMap([[rng.randint(-spread, spread) for _ in range(DIM)]
                       for _ in range(DIM)])
        if g.is_invertible():
            return g
    raise RuntimeError("failed to draw an invertible matrix")


def sample_orbit(orbit_id: int, seed: int) -> tuple[KForm, LinearMap]:
    """Deterministic pseudorandom element of an orbit plus the witness map.

    Seeds are 64-bit integers fed to Python's Mersenne Twister; only integer
    draws are used, so output is stable across platforms.
    """
    if orbit_id not in ORBIT_IDS:
        raise ValueError(f"orbit id must be 1..8, got {orbit_id}")
    rng = random.Random(seed & 0xFFFFFFFFFFFFFFFF)
    g = random_invertible(rng)
    return pullback(g, canonical(orbit_id).form), g
