"""Catalog of explicit stabilizer elements, subgroup embeddings, identities.

Every entry is verified exactly: a named transformation must pull the target
form back to itself (or carry one representative to another), and every
embedding produces matrices that stabilize the advertised canonical form.
Two displayed maps required corrections, recovered by making the
verification predicate hold and recorded in the entry notes: the orbit-6
component map omits one image (the unique completion sends the sixth basis
vector to the fifth), and the first torus block rotates by the sum of the
two parameters, not its negative.

Compact subgroups are sampled at rational points (Cayley transforms,
tan-half-angle rotations, rational points on the unit quaternion sphere) so
all verification stays in exact arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import algebras
from .algebras import AlgebraTable, build_algebra, conjugate, multiply, norm
from .exterior import DIM, KForm, LinearMap, kernel, pullback, scal, wedge
from .forms7 import BASIS_MAP_6, BASIS_MAP_7, canonical, classify, compact_dim

_F0 = Fraction(0)
_F1 = Fraction(1)


def verify_membership(g: LinearMap, w: KForm) -> bool:
    """True iff the pullback of w under g equals w exactly."""
    if w.degree != 3:
        raise ValueError("membership checks expect a 3-form")
    return pullback(g, w) == w


# --- rational parametrizations ------------------------------------------------

def unit_quaternion(u1, u2, u3) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Rational point on the unit sphere of the quaternions (Cayley chart)."""
    u1, u2, u3 = scal(u1), scal(u2), scal(u3)
    d = 1 + u1 * u1 + u2 * u2 + u3 * u3
    return ((1 - u1 * u1 - u2 * u2 - u3 * u3) / d, 2 * u1 / d, 2 * u2 / d, 2 * u3 / d)


def rotation_cs(t) -> tuple[Fraction, Fraction]:
    """Rational (cos, sin) pair from the tan-half-angle parameter t."""
    t = scal(t)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def rotation_matrix(cs: tuple[Fraction, Fraction]):
    c, s = cs
    if c * c + s * s != 1:
        raise ValueError("not a rational rotation: cos^2 + sin^2 != 1")
    return ((c, -s), (s, c))


def compose_angles(a: tuple, b: tuple) -> tuple[Fraction, Fraction]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def negate_angle(a: tuple) -> tuple[Fraction, Fraction]:
    return (a[0], -a[1])


def cayley_so3(s1, s2, s3) -> tuple:
    """Rational special orthogonal 3x3 matrix (I - S)(I + S)^-1 for the
    antisymmetric S built from the three parameters."""
    s1, s2, s3 = scal(s1), scal(s2), scal(s3)
    S = [[_F0, s1, s2], [-s1, _F0, s3], [-s2, -s3, _F0]]
    I3 = [[_F1 if i == j else _F0 for j in range(3)] for i in range(3)]
    IpS = LinearMap([[I3[i][j] + S[i][j] for j in range(3)] for i in range(3)])
    ImS = LinearMap([[I3[i][j] - S[i][j] for j in range(3)] for i in range(3)])
    return (ImS @ IpS.inverse()).rows


def _mat2_to_split_quaternion(m, t: AlgebraTable):
    """2x2 rational matrix -> coordinates in the split-quaternion table."""
    (a11, a12), (a21, a22) = m
    return t.element([
        (scal(a11) + scal(a22)) / 2,
        (scal(a12) - scal(a21)) / 2,
        (scal(a12) + scal(a21)) / 2,
        (scal(a11) - scal(a22)) / 2,
    ])


def _det2(m) -> Fraction:
    return scal(m[0][0]) * scal(m[1][1]) - scal(m[0][1]) * scal(m[1][0])


# --- expressing algebra maps as 7x7 matrices ----------------------------------

def _basis_matrix(t: AlgebraTable, basis) -> LinearMap:
    cols = [list(t.unit().coords)] + [list(b.coords) for b in basis]
    return LinearMap.from_cols(cols)


def _matrix_in_imaginary_basis(t: AlgebraTable, basis, fn) -> LinearMap:
    """7x7 matrix of an algebra-linear map in the given 7-element imaginary
    basis; raises if an image picks up a unit component."""
    p = _basis_matrix(t, basis)
    pinv = p.inverse()
    cols = []
    for b in basis:
        image = fn(b)
        c = pinv.apply(image.coords)
        if c[0] != 0:
            raise ValueError("map does not preserve the imaginary subspace")
        cols.append(c[1:])
    return LinearMap.from_cols(cols)


# frozen imaginary bases: chosen so the induced 3-forms reproduce the printed
# representatives exactly (orbit 8, orbit 5, and the orbit-2 alternate's
# ambient identification)

def _pair(t: AlgebraTable, a, b):
    return t.element(list(a) + list(b))

_Z = (0, 0, 0, 0)
_ONE = (1, 0, 0, 0)
_I = (0, 1, 0, 0)
_J = (0, 0, 1, 0)
_K = (0, 0, 0, 1)


def octonion_form_basis() -> list:
    """Imaginary octonion basis inducing the orbit-8 representative:
    quaternion imaginary units first, then the doubled copy."""
    t = build_algebra("O")
    return [_pair(t, _I, _Z), _pair(t, _J, _Z), _pair(t, _K, _Z), _pair(t, _Z, _ONE),
            _pair(t, _Z, _I), _pair(t, _Z, _J), _pair(t, _Z, _K)]


def split_so4_basis() -> list:
    """Imaginary basis of the quaternion-pair split octonions inducing the
    orbit-5 representative (fifth element carries a sign the pair product
    forces)."""
    t = build_algebra("Osplit")
    return [_pair(t, _I, _Z), _pair(t, _J, _Z), _pair(t, _K, _Z), _pair(t, _Z, _ONE),
            _pair(t, _Z, (0, -1, 0, 0)), _pair(t, _Z, _J), _pair(t, _Z, _K)]


def sl2pair_basis() -> list:
    """Imaginary basis of the doubled split quaternions matching the
    coordinates of the orbit-2 alternate representative."""
    t = build_algebra("Osplit_from_Hsplit")
    return [_pair(t, _I, _Z), _pair(t, _J, _Z), _pair(t, _K, _Z), _pair(t, _Z, _ONE),
            _pair(t, _Z, _I), _pair(t, _Z, _J), _pair(t, _Z, _K)]


def split_octonion_form_basis() -> list:
    """Imaginary basis of the doubled split quaternions inducing the orbit-5
    representative, in the published interleaved order."""
    t = build_algebra("Osplit_from_Hsplit")
    return [_pair(t, _I, _Z), _pair(t, _Z, _ONE), _pair(t, _Z, _I),
            _pair(t, _J, _Z), _pair(t, _K, _Z), _pair(t, _Z, _J), _pair(t, _Z, _K)]


# --- embeddings ----------------------------------------------------------------

def _as_quaternion(t: AlgebraTable, q):
    if isinstance(q, algebras.AlgebraElement):
        return q
    coords = [scal(x) for x in q]
    if len(coords) != 4:
        raise ValueError("quaternion parameters need 4 coordinates")
    return t.element(coords)


def embed_so4(a, b, split: bool = False) -> LinearMap:
    """7x7 matrix of the pair action (p, q) -> (a p a^-1, ...) of two unit
    quaternions on imaginary (split) octonions.

    Without `split` the second slot transforms as b q a^-1 and the matrix
    stabilizes the orbit-8 (and orbit-7) representatives; with `split` it
    transforms as a q b^-1 and stabilizes the orbit-5 representative.
    (a, b) and (-a, -b) give the same matrix.
    """
    H = build_algebra("H")
    a = _as_quaternion(H, a)
    b = _as_quaternion(H, b)
    if norm(H, a) != 1 or norm(H, b) != 1:
        raise ValueError("parameters must be unit quaternions")
    ai = conjugate(H, a)
    bi = conjugate(H, b)
    if split:
        t = build_algebra("Osplit")
        basis = split_so4_basis()

        def fn(x):
            p = H.element(x.coords[:4])
            q = H.element(x.coords[4:])
            p2 = multiply(H, multiply(H, a, p), ai)
            q2 = multiply(H, multiply(H, a, q), bi)
            return t.element(list(p2.coords) + list(q2.coords))
    else:
        t = build_algebra("O")
        basis = octonion_form_basis()

        def fn(x):
            p = H.element(x.coords[:4])
            q = H.element(x.coords[4:])
            p2 = multiply(H, multiply(H, a, p), ai)
            q2 = multiply(H, multiply(H, b, q), ai)
            return t.element(list(p2.coords) + list(q2.coords))

    return _matrix_in_imaginary_basis(t, basis, fn)


def embed_so4_algebra_matrix(a, b, split: bool = False) -> list:
    """Full 8x8 matrix of the same pair action on the (split) octonions, for
    automorphism checks."""
    H = build_algebra("H")
    a = _as_quaternion(H, a)
    b = _as_quaternion(H, b)
    if norm(H, a) != 1 or norm(H, b) != 1:
        raise ValueError("parameters must be unit quaternions")
    ai = conjugate(H, a)
    bi = conjugate(H, b)
    t = build_algebra("Osplit" if split else "O")
    cols = []
    for j in range(8):
        x = t.basis(j)
        p = H.element(x.coords[:4])
        q = H.element(x.coords[4:])
        p2 = multiply(H, multiply(H, a, p), ai)
        if split:
            q2 = multiply(H, multiply(H, a, q), bi)
        else:
            q2 = multiply(H, multiply(H, b, q), ai)
        cols.append(list(p2.coords) + list(q2.coords))
    return [[cols[j][i] for j in range(8)] for i in range(8)]


def embed_sl2pair(a, b) -> LinearMap:
    """7x7 matrix of (p, q) -> (a p a^-1, a q b^-1) for 2x2 rational matrices
    with det a, det b = +-1 and det(ab) = 1; stabilizes the orbit-2 alternate
    (and the orbit-5 variant that differs from it by a volume form)."""
    da, db = _det2(a), _det2(b)
    if da * da != 1 or db * db != 1:
        raise ValueError("parameters must have determinant +1 or -1")
    if da * db != 1:
        raise ValueError("determinant of the product must be 1")
    Ht = build_algebra("Hsplit")
    qa = _mat2_to_split_quaternion(a, Ht)
    qb = _mat2_to_split_quaternion(b, Ht)
    qai = conjugate(Ht, qa).scale(1 / da)
    qbi = conjugate(Ht, qb).scale(1 / db)
    t = build_algebra("Osplit_from_Hsplit")

    def fn(x):
        p = Ht.element(x.coords[:4])
        q = Ht.element(x.coords[4:])
        p2 = multiply(Ht, multiply(Ht, qa, p), qai)
        q2 = multiply(Ht, multiply(Ht, qa, q), qbi)
        return t.element(list(p2.coords) + list(q2.coords))

    return _matrix_in_imaginary_basis(t, sl2pair_basis(), fn)


def embed_so3_33(A) -> LinearMap:
    """Block map fixing e1 and acting by the same rotation on e2..e4 and
    e5..e7; stabilizes the orbit-4 representative."""
    rows = [[scal(x) for x in r] for r in A]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 matrix")
    at_a = [[sum(rows[k][i] * rows[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)]
    if at_a != [[1, 0, 0], [0, 1, 0], [0, 0, 1]]:
        raise ValueError("matrix is not orthogonal")
    det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
           - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
           + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    if det != 1:
        raise ValueError("matrix must have determinant 1")
    g = [[_F0] * 7 for _ in range(7)]
    g[0][0] = _F1
    for i in range(3):
        for j in range(3):
            g[1 + i][1 + j] = rows[i][j]
            g[4 + i][4 + j] = rows[i][j]
    return LinearMap(g)


def embed_gl2pair(a, b) -> LinearMap:
    """det(a)^-1 on e1, det(b)^-1 on e2, a on (e3,e4), b on (e5,e6),
    det(ab) on e7; stabilizes the orbit-1 representative."""
    da, db = _det2(a), _det2(b)
    if not da or not db:
        raise ValueError("parameters must be invertible")
    g = [[_F0] * 7 for _ in range(7)]
    g[0][0] = 1 / da
    g[1][1] = 1 / db
    for i in range(2):
        for j in range(2):
            g[2 + i][2 + j] = scal(a[i][j])
            g[4 + i][4 + j] = scal(b[i][j])
    g[6][6] = da * db
    return LinearMap(g)


# --- infinitesimal generators (exact derivatives of the embeddings) -----------

def so4_generator(x, y, split: bool = False) -> LinearMap:
    """Derivative of the unit-quaternion pair action along imaginary
    directions x, y (3 coordinates each)."""
    H = build_algebra("H")
    qx = H.element([0] + [scal(c) for c in x])
    qy = H.element([0] + [scal(c) for c in y])
    t = build_algebra("Osplit" if split else "O")
    basis = split_so4_basis() if split else octonion_form_basis()

    def fn(v):
        p = H.element(v.coords[:4])
        q = H.element(v.coords[4:])
        dp = multiply(H, qx, p) - multiply(H, p, qx)
        if split:
            dq = multiply(H, qx, q) - multiply(H, q, qy)
        else:
            dq = multiply(H, qy, q) - multiply(H, q, qx)
        return t.element(list(dp.coords) + list(dq.coords))

    return _matrix_in_imaginary_basis(t, basis, fn)


def sl2pair_generator(x, y) -> LinearMap:
    """Derivative of the split pair action along traceless 2x2 directions."""
    Ht = build_algebra("Hsplit")
    qx = _mat2_to_split_quaternion(x, Ht)
    qy = _mat2_to_split_quaternion(y, Ht)
    if qx.coords[0] or qy.coords[0]:
        raise ValueError("generator parameters must be traceless")
    t = build_algebra("Osplit_from_Hsplit")

    def fn(v):
        p = Ht.element(v.coords[:4])
        q = Ht.element(v.coords[4:])
        dp = multiply(Ht, qx, p) - multiply(Ht, p, qx)
        dq = multiply(Ht, qx, q) - multiply(Ht, q, qy)
        return t.element(list(dp.coords) + list(dq.coords))

    return _matrix_in_imaginary_basis(t, sl2pair_basis(), fn)


def so3_33_generator(s1, s2, s3) -> LinearMap:
    S = [[_F0, scal(s1), scal(s2)], [-scal(s1), _F0, scal(s3)], [-scal(s2), -scal(s3), _F0]]
    g = [[_F0] * 7 for _ in range(7)]
    for i in range(3):
        for j in range(3):
            g[1 + i][1 + j] = S[i][j]
            g[4 + i][4 + j] = S[i][j]
    return LinearMap(g)


def gl2pair_generator(x, y) -> LinearMap:
    trx = scal(x[0][0]) + scal(x[1][1])
    trY = scal(y[0][0]) + scal(y[1][1])
    g = [[_F0] * 7 for _ in range(7)]
    g[0][0] = -trx
    g[1][1] = -trY
    for i in range(2):
        for j in range(2):
            g[2 + i][2 + j] = scal(x[i][j])
            g[4 + i][4 + j] = scal(y[i][j])
    g[6][6] = trx + trY
    return LinearMap(g)


def in_matrix_span(candidates: list[LinearMap], target: LinearMap) -> bool:
    """Exact membership of target in the linear span of candidate matrices."""
    n = target.n
    cols = [[m.rows[i][j] for i in range(n) for j in range(n)] for m in candidates]
    tvec = [target.rows[i][j] for i in range(n) for j in range(n)]
    rows = [[cols[c][k] for c in range(len(cols))] + [-tvec[k]]
            for k in range(n * n)]
    for v in kernel(rows):
        if v[len(cols)] != 0:
            return True
    return False


# --- the torus realization ------------------------------------------------------

def torus_matrix(theta_cs, rho_cs) -> LinearMap:
    """Connected maximal torus of the orbit-2 alternate's compact stabilizer:
    blocks 1, R(theta+rho), R(theta), R(rho) on (f1),(f2,f3),(f4,f5),(f6,f7).

    The published display negates the first block's angle; the verification
    predicate (stabilizing the six-term alternate) forces the sign used here.
    """
    th = (scal(theta_cs[0]), scal(theta_cs[1]))
    rh = (scal(rho_cs[0]), scal(rho_cs[1]))
    for c, s in (th, rh):
        if c * c + s * s != 1:
            raise ValueError("angles must be rational rotation pairs")
    blocks = [rotation_matrix(compose_angles(th, rh)), rotation_matrix(th),
              rotation_matrix(rh)]
    g = [[_F0] * 7 for _ in range(7)]
    g[0][0] = _F1
    for bi, blk in enumerate(blocks):
        r0 = 1 + 2 * bi
        for i in range(2):
            for j in range(2):
                g[r0 + i][r0 + j] = blk[i][j]
    return LinearMap(g)


def torus_from_rotation_pair(cs1, cs2) -> LinearMap:
    """The torus element realized by the split pair embedding of two plane
    rotations: angles combine as (-2a, b-a, -a-b)."""
    a = (scal(cs1[0]), scal(cs1[1]))
    b = (scal(cs2[0]), scal(cs2[1]))
    theta = compose_angles(negate_angle(a), b)
    rho = compose_angles(negate_angle(a), negate_angle(b))
    return torus_matrix(theta, rho)


def _rotation_as_sl2(cs) -> list:
    c, s = scal(cs[0]), scal(cs[1])
    return [[c, -s], [s, c]]


# --- the named-transformation catalog -------------------------------------------

@dataclass(frozen=True)
class NamedTransformation:
    name: str
    map: LinearMap
    target: tuple[int, str]
    claim: str  # "stabilizes" or "carries_to"
    note: str = ""

    def verify(self) -> bool:
        source = canonical(self.target[0], "standard").form
        if self.claim == "stabilizes":
            target_form = canonical(*self.target).form
            return verify_membership(self.map, target_form)
        if self.claim == "carries_to":
            return pullback(self.map, source) == canonical(*self.target).form
        raise ValueError(f"unknown claim {self.claim!r}")


def _images(d: dict) -> LinearMap:
    return LinearMap.from_images({k: [scal(x) for x in v] for k, v in d.items()})


def catalog() -> tuple[NamedTransformation, ...]:
    return (
        NamedTransformation(
            "k1-swap-component",
            _images({1: [0, 1, 0, 0, 0, 0, 0], 2: [1, 0, 0, 0, 0, 0, 0],
                     3: [0, 0, 0, 0, 1, 0, 0], 4: [0, 0, 0, 0, 0, 1, 0],
                     5: [0, 0, 1, 0, 0, 0, 0], 6: [0, 0, 0, 1, 0, 0, 0],
                     7: [0, 0, 0, 0, 0, 0, -1]}),
            (1, "standard"), "stabilizes",
            "swaps the two 2-plane blocks; completes the compact part of orbit 1"),
        NamedTransformation(
            "k2-torus-second-component",
            _images({1: [-1, 0, 0, 0, 0, 0, 0], 3: [0, 0, -1, 0, 0, 0, 0],
                     4: [0, 0, 0, 0, -1, 0, 0], 5: [0, 0, 0, -1, 0, 0, 0],
                     6: [0, 0, 0, 0, 0, 0, 1], 7: [0, 0, 0, 0, 0, 1, 0]}),
            (2, "prime"), "stabilizes",
            "second component of the maximal torus of the orbit-2 compact part"),
        NamedTransformation(
            "k2-determinant-component",
            _images({3: [0, 0, -1, 0, 0, 0, 0], 4: [0, 0, 0, 0, 0, 0, 1],
                     5: [0, 0, 0, 0, 0, 1, 0], 6: [0, 0, 0, 0, 1, 0, 0],
                     7: [0, 0, 0, 1, 0, 0, 0]}),
            (2, "prime"), "stabilizes",
            "splits the determinant sign character of the orbit-2 stabilizer"),
        NamedTransformation(
            "k3-second-component",
            LinearMap([[(-1) ** i if i == j else 0 for j in range(1, 8)]
                       for i in range(1, 8)]),
            (3, "standard"), "stabilizes",
            "alternating sign flip; second component of the orbit-3 compact part"),
        NamedTransformation(
            "k4-second-component",
            _images({1: [-1, 0, 0, 0, 0, 0, 0], 5: [0, 0, 0, 0, -1, 0, 0],
                     6: [0, 0, 0, 0, 0, -1, 0], 7: [0, 0, 0, 0, 0, 0, -1]}),
            (4, "standard"), "stabilizes",
            "negates e1 and the second 3-block; second component of orbit 4"),
        NamedTransformation(
            "k6-second-component",
            _images({1: [0, 1, 0, 0, 0, 0, 0], 2: [1, 0, 0, 0, 0, 0, 0],
                     3: [0, 0, -1, 0, 0, 0, 0], 5: [0, 0, 0, 0, 0, 1, 0],
                     6: [0, 0, 0, 0, 1, 0, 0], 7: [0, 0, 0, 0, 0, 0, -1]}),
            (6, "standard"), "stabilizes",
            "published display repeats the image of e5 and omits e6; the unique "
            "completion with e6 -> e5 is the one that verifies"),
        NamedTransformation(
            "orbit2-basis-change", canonical(2, "prime").change_of_basis,
            (2, "prime"), "carries_to",
            "rational form of the published basis change (the intermediate "
            "square-root scalings cancel after halving the first three vectors)"),
        NamedTransformation(
            "orbit6-alternate-map", BASIS_MAP_6.inverse(), (6, "prime"), "carries_to",
            "inverse of the published orbit-6 adjustment map"),
        NamedTransformation(
            "orbit7-alternate-map", BASIS_MAP_7.inverse(), (7, "prime"), "carries_to",
            "inverse of the published orbit-7 adjustment map"),
    )


# --- identity suite --------------------------------------------------------------

def _orbit6_reduction_form() -> KForm:
    return canonical(6).form - wedge(KForm.monomial([3]),
                                     KForm.monomial([4, 7]) - KForm.monomial([5, 6]))


def _orbit6_reduction_algebra_form() -> KForm:
    """Induced form of the quaternion-pair split octonions on the display
    basis {i, j, k, e, ie, je, ke} (doubling unit multiplied on the right)."""
    t = build_algebra("Osplit")
    e = _pair(t, _Z, _ONE)
    qi, qj, qk = _pair(t, _I, _Z), _pair(t, _J, _Z), _pair(t, _K, _Z)
    basis = [qi, qj, qk, e, multiply(t, qi, e), multiply(t, qj, e), multiply(t, qk, e)]
    return algebras.triple_form(t, basis)


_TORUS_SAMPLE_ANGLES = ((Fraction(3, 5), Fraction(4, 5)),
                        (Fraction(5, 13), Fraction(12, 13)),
                        (Fraction(8, 17), Fraction(15, 17)))


def identity_checks() -> list[dict]:
    """Evaluate every catalogued identity as exact form equality (orbit
    membership where that is the claim); returns one entry per anchor."""
    report = []

    def add(anchor: str, ok: bool, detail: str = ""):
        report.append({"anchor": anchor, "status": "pass" if ok else "fail",
                       **({"detail": detail} if detail else {})})

    w = {i: canonical(i).form for i in (2, 5, 6, 7, 8)}
    w2p = canonical(2, "prime").form
    vol3 = KForm.monomial([1, 2, 3])

    add("orbit8-is-orbit7-plus-volume", w[8] == w[7] + vol3)

    shifted = w2p + vol3
    add("orbit2-alternate-volume-shift-equals-orbit5-variant",
        shifted == canonical(5, "prime").form and classify(shifted) == 5)

    red = _orbit6_reduction_form()
    add("orbit6-reduction-equals-induced-split-form",
        red == _orbit6_reduction_algebra_form() and classify(red) == 5)

    add("orbit6-alternate-representative-stays-in-orbit",
        classify(pullback(BASIS_MAP_6.inverse(), w[6])) == 6)
    add("orbit7-alternate-representative-stays-in-orbit",
        classify(pullback(BASIS_MAP_7.inverse(), w[7])) == 7)

    add("orbit2-basis-change-reproduces-alternate",
        pullback(canonical(2, "prime").change_of_basis, w[2]) == w2p)

    for tr in catalog():
        add(f"transformation-{tr.name}", tr.verify(), tr.note)

    torus_ok = all(verify_membership(torus_matrix(th, rh), w2p)
                   for th in _TORUS_SAMPLE_ANGLES for rh in _TORUS_SAMPLE_ANGLES)
    add("torus-realization-stabilizes-orbit2-alternate", torus_ok,
        "first block angle corrected to theta+rho")

    embed_torus_ok = True
    for cs1 in _TORUS_SAMPLE_ANGLES:
        for cs2 in _TORUS_SAMPLE_ANGLES:
            m = embed_sl2pair(_rotation_as_sl2(cs1), _rotation_as_sl2(cs2))
            embed_torus_ok &= m == torus_from_rotation_pair(cs1, cs2)
    add("torus-elements-arise-from-rotation-pairs", embed_torus_ok)

    return report


# --- full verification run --------------------------------------------------------

EXPECTED_COMPACT_DIMS = (2, 2, 9, 3, 6, 4, 6, 14)


def _preferred_representatives() -> list[KForm]:
    return [canonical(1).form, canonical(2, "prime").form, canonical(3).form,
            canonical(4).form, canonical(5).form, canonical(6).form,
            canonical(7).form, canonical(8).form]


def verify_paper(draws: int = 10, seed: int = 0) -> list[dict]:
    """Identity suite + compact dimensions + randomized embedding checks.

    Every entry carries an anchor and pass/fail status; the run is
    deterministic for a fixed seed and self-contained.
    """
    report = identity_checks()
    rng = random.Random(seed)

    for orbit_id, expected, w in zip(range(1, 9), EXPECTED_COMPACT_DIMS,
                                     _preferred_representatives()):
        got = compact_dim(w)
        report.append({"anchor": f"compact-dimension-orbit-{orbit_id}",
                       "status": "pass" if got == expected else "fail",
                       "detail": f"expected {expected}, computed {got}"})

    w1 = canonical(1).form
    w2p = canonical(2, "prime").form
    w4 = canonical(4).form
    w5 = canonical(5).form
    w7 = canonical(7).form
    w8 = canonical(8).form

    def rnd_unit_quat():
        return unit_quaternion(Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                               Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                               Fraction(rng.randint(-3, 3), rng.randint(1, 3)))

    ok8 = ok7 = ok5 = True
    for _ in range(draws):
        a, b = rnd_unit_quat(), rnd_unit_quat()
        m = embed_so4(a, b)
        ok8 &= verify_membership(m, w8)
        ok7 &= verify_membership(m, w7)
        ok5 &= verify_membership(embed_so4(a, b, split=True), w5)
    report.append({"anchor": "embedding-so4-stabilizes-orbit8",
                   "status": "pass" if ok8 else "fail"})
    report.append({"anchor": "embedding-so4-stabilizes-orbit7",
                   "status": "pass" if ok7 else "fail"})
    report.append({"anchor": "embedding-so4-split-stabilizes-orbit5",
                   "status": "pass" if ok5 else "fail"})

    ok2 = True
    for _ in range(draws):
        a, b = sample_sl2pair(rng)
        ok2 &= verify_membership(embed_sl2pair(a, b), w2p)
    report.append({"anchor": "embedding-sl2pair-stabilizes-orbit2-alternate",
                   "status": "pass" if ok2 else "fail"})

    ok4 = True
    for _ in range(draws):
        A = cayley_so3(Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                       Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                       Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
        ok4 &= verify_membership(embed_so3_33(A), w4)
    report.append({"anchor": "embedding-so3-stabilizes-orbit4",
                   "status": "pass" if ok4 else "fail"})

    ok1 = True
    for _ in range(draws):
        a, b = sample_gl2(rng), sample_gl2(rng)
        ok1 &= verify_membership(embed_gl2pair(a, b), w1)
    report.append({"anchor": "embedding-gl2pair-stabilizes-orbit1",
                   "status": "pass" if ok1 else "fail"})

    return report


def sample_gl2(rng: random.Random) -> list:
    while True:
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
        if _det2(m):
            return m


def sample_sl2pair(rng: random.Random) -> tuple[list, list]:
    """Pair of unimodular-up-to-sign 2x2 matrices with det(ab) = 1."""

    def elem():
        m = [[_F1, _F0], [_F0, _F1]]
        for _ in range(rng.randint(1, 4)):
            t = Fraction(rng.randint(-2, 2))
            if rng.randint(0, 1):
                m = [[m[0][0] + t * m[1][0], m[0][1] + t * m[1][1]],
                     [m[1][0], m[1][1]]]
            else:
                m = [[m[0][0], m[0][1]],
                     [m[1][0] + t * m[0][0], m[1][1] + t * m[0][1]]]
        return m

    a, b = elem(), elem()
    if rng.randint(0, 1):
        # flip both determinants to -1, keeping det(ab) = 1
        a = [[a[0][0], -a[0][1]], [a[1][0], -a[1][1]]]
        b = [[b[0][0], -b[0][1]], [b[1][0], -b[1][1]]]
    return a, b
