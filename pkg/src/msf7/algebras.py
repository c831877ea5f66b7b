"""Cayley-Dickson construction and the concrete composition algebras.

An :class:`AlgebraTable` stores structure constants, the conjugation matrix,
the polarized norm form and the unit index, all over exact rationals.  Seven
concrete algebras are built by :func:`build_algebra`:

    R, C, H            -- the division tower (doubling with e^2 = -1)
    Hsplit             -- split quaternions, realized by the 2x2 matrix model
    O                  -- octonions, doubling H
    Osplit             -- split octonions as quaternion pairs with the
                          plus-sign product (ac + d b~, cb + a~ d)
    Osplit_from_Hsplit -- split octonions by doubling the split quaternions

The doubling product used for C, H, O and Osplit_from_Hsplit is

    (a, b) (c, d) = (a c - d~ b,  d a + b c~)

with conjugation (a, b)~ = (a~, -b).  This is the unique ordering of the
doubled slot for which x x~ = <x, x> 1 stays central once the base algebra is
noncommutative; the variant with the final product reversed fails that
identity for quaternion pairs and is rejected by the table validator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import KForm, SymmetricMatrix, kernel, scal, signature

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class AlgebraTable:
    """Finite-dimensional algebra with conjugation and polarized norm form.

    mult[i][j][k] is the e_k coefficient of e_i * e_j; conj is a dim x dim
    matrix acting on coordinates; norm is the symmetric matrix of <x, y> with
    x * conj(x) = <x, x> * unit.
    """

    name: str
    dim: int
    mult: tuple
    conj: tuple
    norm: SymmetricMatrix
    unit_index: int
    labels: tuple

    def basis(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, tuple(_F1 if k == i else _F0 for k in range(self.dim)))

    def unit(self) -> "AlgebraElement":
        return self.basis(self.unit_index)

    def element(self, coords) -> "AlgebraElement":
        cs = tuple(scal(c) for c in coords)
        if len(cs) != self.dim:
            raise ValueError(f"{self.name}: expected {self.dim} coordinates, got {len(cs)}")
        return AlgebraElement(self, cs)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (_F0,) * self.dim)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "unit_index": self.unit_index,
            "labels": list(self.labels),
            "mult": [[[str(c) for c in col] for col in row] for row in self.mult],
            "conj": [[str(c) for c in row] for row in self.conj],
            "norm": [[str(c) for c in row] for row in self.norm.rows],
        }


@dataclass(frozen=True)
class AlgebraElement:
    table: AlgebraTable
    coords: tuple

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.table, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.table, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.table, tuple(-a for a in self.coords))

    def scale(self, c) -> "AlgebraElement":
        c = scal(c)
        return AlgebraElement(self.table, tuple(c * a for a in self.coords))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self.table, self, other)

    def _check(self, other: "AlgebraElement") -> None:
        if self.table is not other.table and self.table != other.table:
            raise ValueError("elements belong to different algebras")

    def __repr__(self):
        parts = [f"{c}*{l}" for c, l in zip(self.coords, self.table.labels) if c]
        return f"<{self.table.name}: {' + '.join(parts) if parts else '0'}>"


def multiply(t: AlgebraTable, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if len(x.coords) != t.dim or len(y.coords) != t.dim:
        raise ValueError("dimension mismatch")
    out = [_F0] * t.dim
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        mi = t.mult[i]
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            c = xi * yj
            for k, m in enumerate(mi[j]):
                if m:
                    out[k] += c * m
    return AlgebraElement(t, tuple(out))


def conjugate(t: AlgebraTable, x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(t, tuple(sum(t.conj[i][j] * x.coords[j] for j in range(t.dim))
                                   for i in range(t.dim)))


def norm(t: AlgebraTable, x: AlgebraElement) -> Fraction:
    """<x, x>: the unit coefficient of x * conj(x)."""
    return inner(t, x, x)


def inner(t: AlgebraTable, x: AlgebraElement, y: AlgebraElement) -> Fraction:
    return sum(x.coords[i] * t.norm.rows[i][j] * y.coords[j]
               for i in range(t.dim) for j in range(t.dim))


def is_automorphism(t: AlgebraTable, g) -> bool:
    """True iff g (dim x dim matrix, column = image of basis vector) preserves
    the product on all basis pairs and fixes the unit."""
    rows = [[scal(x) for x in r] for r in getattr(g, "rows", g)]
    dim = t.dim
    if len(rows) != dim or any(len(r) != dim for r in rows):
        return False
    images = [AlgebraElement(t, tuple(rows[i][j] for i in range(dim))) for j in range(dim)]
    unit = t.unit()
    gu = images[t.unit_index]
    if gu.coords != unit.coords:
        return False
    for i in range(dim):
        for j in range(dim):
            lhs_coords = multiply(t, t.basis(i), t.basis(j)).coords
            lhs = t.zero()
            for k, c in enumerate(lhs_coords):
                if c:
                    lhs += images[k].scale(c)
            rhs = multiply(t, images[i], images[j])
            if lhs.coords != rhs.coords:
                return False
    return True


# --- construction -----------------------------------------------------------

def _table_from_mult(name, dim, mult, conj, unit_index, labels) -> AlgebraTable:
    """Assemble a table, deriving the polarized norm form, and validate it."""
    t_probe = AlgebraTable(name, dim, mult, conj, SymmetricMatrix([[0] * dim] * dim),
                           unit_index, labels)

    def n_of(coords):
        x = AlgebraElement(t_probe, tuple(coords))
        xc = multiply(t_probe, x, conjugate(t_probe, x))
        for k, c in enumerate(xc.coords):
            if k != unit_index and c:
                raise ValueError(f"{name}: x*conj(x) is not central on {coords}")
        return xc.coords[unit_index]

    diag = [n_of([_F1 if k == i else _F0 for k in range(dim)]) for i in range(dim)]
    rows = [[_F0] * dim for _ in range(dim)]
    for i in range(dim):
        rows[i][i] = diag[i]
    for i in range(dim):
        for j in range(i + 1, dim):
            nij = n_of([_F1 if k in (i, j) else _F0 for k in range(dim)])
            rows[i][j] = rows[j][i] = (nij - diag[i] - diag[j]) / 2
    table = AlgebraTable(name, dim, mult, conj, SymmetricMatrix(rows), unit_index, labels)
    _validate(table)
    return table


def _validate(t: AlgebraTable) -> None:
    unit = t.unit()
    for i in range(t.dim):
        b = t.basis(i)
        if multiply(t, unit, b).coords != b.coords or multiply(t, b, unit).coords != b.coords:
            raise ValueError(f"{t.name}: unit is not a two-sided identity")
        if conjugate(t, conjugate(t, b)).coords != b.coords:
            raise ValueError(f"{t.name}: conjugation is not an involution")
    for i in range(t.dim):
        for j in range(t.dim):
            lhs = conjugate(t, multiply(t, t.basis(i), t.basis(j)))
            rhs = multiply(t, conjugate(t, t.basis(j)), conjugate(t, t.basis(i)))
            if lhs.coords != rhs.coords:
                raise ValueError(f"{t.name}: conjugation is not an anti-automorphism")


def _cayley_dickson(base: AlgebraTable, name: str, gamma: int = 1) -> AlgebraTable:
    """Double `base`: pairs (a, b) with (a,b)(c,d) = (ac - gamma d~ b, da + bc~).

    gamma=+1 gives the doubling unit e^2 = -1 (C, H, O and the split octonions
    over split quaternions); gamma=-1 gives e^2 = +1.
    """
    d0 = base.dim
    dim = 2 * d0

    def pair_mult(i, j):
        a, ea = (i % d0, i >= d0)
        c, ec = (j % d0, j >= d0)
        out = [_F0] * dim
        # expand (a,b)(c,d) on basis elements: exactly one of a/b and c/d is set
        if not ea and not ec:
            prod = multiply(base, base.basis(a), base.basis(c))
            for k, v in enumerate(prod.coords):
                out[k] += v
        elif not ea and ec:
            # (a,0)(0,d) -> (0, d a)
            prod = multiply(base, base.basis(c), base.basis(a))
            for k, v in enumerate(prod.coords):
                out[d0 + k] += v
        elif ea and not ec:
            # (0,b)(c,0) -> (0, b c~)
            prod = multiply(base, base.basis(a), conjugate(base, base.basis(c)))
            for k, v in enumerate(prod.coords):
                out[d0 + k] += v
        else:
            # (0,b)(0,d) -> (-gamma d~ b, 0)
            prod = multiply(base, conjugate(base, base.basis(c)), base.basis(a))
            for k, v in enumerate(prod.coords):
                out[k] -= gamma * v
        return tuple(out)

    mult = tuple(tuple(pair_mult(i, j) for j in range(dim)) for i in range(dim))
    conj = [[_F0] * dim for _ in range(dim)]
    for i in range(d0):
        for j in range(d0):
            conj[i][j] = base.conj[i][j]
    for i in range(d0):
        conj[d0 + i][d0 + i] = -_F1
    labels = tuple(base.labels) + tuple(f"{l}e" if l != "1" else "e" for l in base.labels)
    return _table_from_mult(name, dim, mult, tuple(tuple(r) for r in conj),
                            base.unit_index, labels)


def _double_plus_pairs(base: AlgebraTable, name: str) -> AlgebraTable:
    """Quaternion-pair model (a,b)(c,d) = (ac + d b~, cb + a~ d) of the split
    octonions; conjugation is (a,b)~ = (a~, -b)."""
    d0 = base.dim
    dim = 2 * d0

    def pair_mult(i, j):
        a, ea = (i % d0, i >= d0)
        c, ec = (j % d0, j >= d0)
        out = [_F0] * dim
        if not ea and not ec:
            prod = multiply(base, base.basis(a), base.basis(c))
            for k, v in enumerate(prod.coords):
                out[k] += v
        elif not ea and ec:
            # (a,0)(0,d) -> (0, a~ d)
            prod = multiply(base, conjugate(base, base.basis(a)), base.basis(c))
            for k, v in enumerate(prod.coords):
                out[d0 + k] += v
        elif ea and not ec:
            # (0,b)(c,0) -> (0, c b)
            prod = multiply(base, base.basis(c), base.basis(a))
            for k, v in enumerate(prod.coords):
                out[d0 + k] += v
        else:
            # (0,b)(0,d) -> (d b~, 0)
            prod = multiply(base, base.basis(c), conjugate(base, base.basis(a)))
            for k, v in enumerate(prod.coords):
                out[k] += v
        return tuple(out)

    mult = tuple(tuple(pair_mult(i, j) for j in range(dim)) for i in range(dim))
    conj = [[_F0] * dim for _ in range(dim)]
    for i in range(d0):
        for j in range(d0):
            conj[i][j] = base.conj[i][j]
    for i in range(d0):
        conj[d0 + i][d0 + i] = -_F1
    labels = tuple(base.labels) + tuple(f"e{l}" if l != "1" else "e" for l in base.labels)
    return _table_from_mult(name, dim, mult, tuple(tuple(r) for r in conj),
                            base.unit_index, labels)


def _build_reals() -> AlgebraTable:
    return _table_from_mult("R", 1, ((( _F1,),),), ((_F1,),), 0, ("1",))


def _build_split_quaternions() -> AlgebraTable:
    # matrix model: i = [[0,1],[-1,0]], j = [[0,1],[1,0]], k = i j = [[1,0],[0,-1]]
    one = ((_F1, _F0), (_F0, _F1))
    i = ((_F0, _F1), (-_F1, _F0))
    j = ((_F0, _F1), (_F1, _F0))
    k = ((_F1, _F0), (_F0, -_F1))
    mats = [one, i, j, k]

    def mat_mul(a, b):
        return tuple(tuple(sum(a[r][t] * b[t][c] for t in range(2)) for c in range(2))
                     for r in range(2))

    def to_coords(m):
        # 1 = [[a,0],[0,a]] part etc.; decompose m = a*1 + b*i + c*j + d*k
        a = (m[0][0] + m[1][1]) / 2
        d = (m[0][0] - m[1][1]) / 2
        b = (m[0][1] - m[1][0]) / 2
        c = (m[0][1] + m[1][0]) / 2
        return (a, b, c, d)

    mult = tuple(tuple(to_coords(mat_mul(mats[i_], mats[j_])) for j_ in range(4))
                 for i_ in range(4))
    conj = ((_F1, _F0, _F0, _F0), (_F0, -_F1, _F0, _F0),
            (_F0, _F0, -_F1, _F0), (_F0, _F0, _F0, -_F1))
    return _table_from_mult("Hsplit", 4, mult, conj, 0, ("1", "i", "j", "k"))


_CACHE: dict[str, AlgebraTable] = {}

ALGEBRA_KINDS = ("R", "C", "H", "Hsplit", "O", "Osplit", "Osplit_from_Hsplit")


def build_algebra(kind: str) -> AlgebraTable:
    """Return the named composition algebra (cached; tables are immutable)."""
    if kind not in ALGEBRA_KINDS:
        raise ValueError(f"unknown algebra kind {kind!r}; expected one of {ALGEBRA_KINDS}")
    if kind in _CACHE:
        return _CACHE[kind]
    if kind == "R":
        t = _build_reals()
    elif kind == "C":
        t = _cayley_dickson(build_algebra("R"), "C")
    elif kind == "H":
        t = _cayley_dickson(build_algebra("C"), "H")
    elif kind == "Hsplit":
        t = _build_split_quaternions()
    elif kind == "O":
        t = _cayley_dickson(build_algebra("H"), "O")
    elif kind == "Osplit":
        t = _double_plus_pairs(build_algebra("H"), "Osplit")
    else:
        t = _cayley_dickson(build_algebra("Hsplit"), "Osplit_from_Hsplit")
    _CACHE[kind] = t
    return t


# --- induced 3-forms ---------------------------------------------------------

def imaginary_coords(t: AlgebraTable, x: AlgebraElement) -> bool:
    """True iff x is orthogonal to the unit under the norm form."""
    return inner(t, x, t.unit()) == 0


def triple_form(t: AlgebraTable, basis_map) -> KForm:
    """The alternating form (a, b, c) -> <a b, c> on the listed 7 imaginary
    elements, as a KForm in the dual of that list.

    Raises if an element is not imaginary or if the result fails to alternate.
    """
    if t.dim != 8:
        raise ValueError("triple_form needs an 8-dimensional algebra")
    basis = list(basis_map)
    if len(basis) != 7:
        raise ValueError("need exactly 7 imaginary basis elements")
    for b in basis:
        if not imaginary_coords(t, b):
            raise ValueError(f"basis element {b} is not imaginary")
    vals = {}
    for p in range(7):
        for q in range(7):
            xy = multiply(t, basis[p], basis[q])
            for r in range(7):
                vals[(p, q, r)] = inner(t, xy, basis[r])
    # alternation check over all argument positions
    for p in range(7):
        for q in range(7):
            for r in range(7):
                v = vals[(p, q, r)]
                if vals[(q, p, r)] != -v or vals[(p, r, q)] != -v:
                    raise ValueError("induced trilinear form is not alternating")
    terms = {}
    for p in range(7):
        for q in range(p + 1, 7):
            for r in range(q + 1, 7):
                c = vals[(p, q, r)]
                if c:
                    terms[(p + 1, q + 1, r + 1)] = c
    return KForm(3, terms)


def norm_signature(t: AlgebraTable, imaginary_only: bool = False) -> tuple[int, int, int]:
    """Signature of the norm form, optionally restricted to the orthogonal
    complement of the unit."""
    if not imaginary_only:
        return signature(t.norm)
    unit_row = [t.norm.rows[t.unit_index][j] for j in range(t.dim)]
    comp = kernel([unit_row])
    gram = [[sum(u[a] * t.norm.rows[a][b] * v[b] for a in range(t.dim) for b in range(t.dim))
             for v in comp] for u in comp]
    return signature(gram)


def find_signed_permutation_isomorphism(src: AlgebraTable, dst: AlgebraTable):
    """Search for an algebra isomorphism src -> dst sending unit to unit and
    each non-unit basis element to +/- a non-unit basis element.

    Returns the dim x dim column matrix (list of columns) or None.  The search
    prunes by norms and is exhaustive over the remaining signed permutations.
    """
    if src.dim != dst.dim:
        return None
    dim = src.dim
    others = [i for i in range(dim) if i != src.unit_index]
    targets = [i for i in range(dim) if i != dst.unit_index]
    n_src = {i: norm(src, src.basis(i)) for i in others}
    n_dst = {i: norm(dst, dst.basis(i)) for i in targets}

    cols: list = [None] * dim
    cols[src.unit_index] = dst.basis(dst.unit_index).coords
    used: set = set()

    def images():
        return {i: dst.element(cols[i]) for i in range(dim) if cols[i] is not None}

    def consistent(i_new) -> bool:
        imgs = images()
        xi = imgs[i_new]
        for j, xj in imgs.items():
            for a, b, x, y in ((i_new, j, xi, xj), (j, i_new, xj, xi)):
                prod = multiply(src, src.basis(a), src.basis(b))
                want = dst.zero()
                ok = True
                for k, c in enumerate(prod.coords):
                    if c:
                        if cols[k] is None:
                            ok = False
                            break
                        want += dst.element(cols[k]).scale(c)
                if ok and want.coords != multiply(dst, x, y).coords:
                    return False
        return True

    def backtrack(pos: int) -> bool:
        if pos == len(others):
            return True
        i = others[pos]
        for tgt in targets:
            if tgt in used or n_dst[tgt] != n_src[i]:
                continue
            for sign in (1, -1):
                cols[i] = dst.basis(tgt).scale(sign).coords
                used.add(tgt)
                if consistent(i) and backtrack(pos + 1):
                    return True
                used.discard(tgt)
                cols[i] = None
        return False

    if backtrack(0):
        return [tuple(c) for c in cols]
    return None
