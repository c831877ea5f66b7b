"""Exact multilinear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` coefficients; no
floating point is used anywhere, so equalities like ``pullback(g, w) == w``
are decidable.  The ambient space is R^n with basis vectors indexed 1..n
(n = 7 throughout this package, but nothing below hardwires it except the
defaults).

Main objects:

* ``KForm``     -- alternating k-form, sparse map {increasing index tuple: coefficient}
* ``LinearMap`` -- n x n rational matrix, column j = image of basis vector e_j
* ``wedge``, ``interior``, ``pullback`` -- the exterior-algebra operations
* ``kernel``    -- exact nullspace basis via fraction-free (Bareiss) elimination
* ``signature`` -- exact signature of a rational symmetric matrix
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Scalar = Fraction

DIM = 7


def scal(x) -> Fraction:
    """Coerce ints, strings like '-1/2', and Fractions to an exact Scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def vec(*coords, n: int = DIM) -> tuple[Fraction, ...]:
    """Build an exact coordinate vector, zero padded to length n."""
    cs = [scal(c) for c in coords]
    if len(cs) > n:
        raise ValueError("too many coordinates")
    return tuple(cs + [Fraction(0)] * (n - len(cs)))


def basis_vector(i: int, n: int = DIM) -> tuple[Fraction, ...]:
    """Standard basis vector e_i (1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"basis index {i} out of range 1..{n}")
    return tuple(Fraction(1 if j == i else 0) for j in range(1, n + 1))


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def _sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort indices, returning (sorted tuple, permutation sign); sign 0 on repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort; k is tiny (<= 7)
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


class KForm:
    """Alternating k-form with exact rational coefficients.

    ``terms`` maps strictly increasing index tuples (1-based) to nonzero
    Fractions.  Instances are treated as immutable values; all operations
    return new forms.  Two forms are equal iff degree and term maps agree.
    """

    __slots__ = ("degree", "terms", "n")

    def __init__(self, degree: int, terms: Mapping[tuple[int, ...], Fraction] | None = None,
                 n: int = DIM):
        if not 0 <= degree <= n:
            raise ValueError(f"degree {degree} out of range 0..{n}")
        self.degree = degree
        self.n = n
        clean: dict[tuple[int, ...], Fraction] = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index {idx} has wrong length for degree {degree}")
            if any(not 1 <= i <= n for i in idx):
                raise ValueError(f"index {idx} out of range 1..{n}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index {idx} is not strictly increasing")
            c = scal(c)
            if c:
                clean[idx] = c
        self.terms = clean

    @classmethod
    def zero(cls, degree: int, n: int = DIM) -> "KForm":
        return cls(degree, {}, n)

    @classmethod
    def monomial(cls, indices: Sequence[int], coef=1, n: int = DIM) -> "KForm":
        """Coefficient times alpha_{i1} ^ ... ^ alpha_{ik}; indices in any order."""
        idx, sign = _sort_with_sign(indices)
        if sign == 0:
            return cls.zero(len(indices), n)
        return cls(len(indices), {idx: sign * scal(coef)}, n)

    @classmethod
    def from_terms(cls, degree: int, entries: Iterable[tuple[Sequence[int], object]],
                   n: int = DIM) -> "KForm":
        """Sum of monomials; repeated or unsorted indices handled with signs."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for indices, coef in entries:
            idx, sign = _sort_with_sign(indices)
            if sign == 0:
                continue
            c = acc.get(idx, Fraction(0)) + sign * scal(coef)
            if c:
                acc[idx] = c
            else:
                acc.pop(idx, None)
        return cls(degree, acc, n)

    def __eq__(self, other) -> bool:
        return (isinstance(other, KForm) and self.degree == other.degree
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "KForm") -> "KForm":
        if self.degree != other.degree or self.n != other.n:
            raise ValueError("cannot add forms of different degree")
        acc = dict(self.terms)
        for idx, c in other.terms.items():
            s = acc.get(idx, Fraction(0)) + c
            if s:
                acc[idx] = s
            else:
                acc.pop(idx, None)
        return KForm(self.degree, acc, self.n)

    def __neg__(self) -> "KForm":
        return KForm(self.degree, {i: -c for i, c in self.terms.items()}, self.n)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __mul__(self, c) -> "KForm":
        c = scal(c)
        if not c:
            return KForm.zero(self.degree, self.n)
        return KForm(self.degree, {i: c * v for i, v in self.terms.items()}, self.n)

    __rmul__ = __mul__

    def wedge(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    __xor__ = wedge

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        idx, sign = _sort_with_sign(indices)
        if sign == 0:
            return Fraction(0)
        return sign * self.terms.get(idx, Fraction(0))

    def evaluate(self, vectors: Sequence[Sequence[Fraction]]) -> Fraction:
        """Full multilinear evaluation on k coordinate vectors (independent of
        wedge/interior/pullback; used as an oracle in tests)."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        total = Fraction(0)
        for idx, c in self.terms.items():
            total += c * _det([[v[i - 1] for i in idx] for v in vectors])
        return total

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "terms": [{"idx": list(idx), "coef": str(c)}
                          for idx, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data: Mapping, n: int = DIM) -> "KForm":
        try:
            degree = int(data["degree"])
            terms = {tuple(int(i) for i in t["idx"]): scal(t["coef"])
                     for t in data["terms"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed KForm JSON: {exc}") from exc
        return cls(degree, terms, n)

    def __repr__(self):
        if not self.terms:
            return f"KForm({self.degree}, 0)"
        parts = []
        for idx, c in sorted(self.terms.items()):
            mono = "^".join(f"a{i}" for i in idx) if idx else "1"
            if c == 1:
                parts.append(f"+ {mono}")
            elif c == -1:
                parts.append(f"- {mono}")
            elif c > 0:
                parts.append(f"+ {c}*{mono}")
            else:
                parts.append(f"- {-c}*{mono}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out


def wedge(a: KForm, b: KForm) -> KForm:
    """Exterior product; graded-commutative, zero when degrees exceed n."""
    if a.n != b.n:
        raise ValueError("forms live in different dimensions")
    deg = a.degree + b.degree
    if deg > a.n:
        return KForm.zero(a.n, a.n)
    acc: dict[tuple[int, ...], Fraction] = {}
    for ia, ca in a.terms.items():
        sa = set(ia)
        for ib, cb in b.terms.items():
            if sa.intersection(ib):
                continue
            idx, sign = _merge_with_sign(ia, ib)
            c = acc.get(idx, Fraction(0)) + sign * ca * cb
            if c:
                acc[idx] = c
            else:
                acc.pop(idx, None)
    return KForm(deg, acc, a.n)


def _merge_with_sign(ia: tuple[int, ...], ib: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Merge two disjoint increasing tuples, counting adjacent transpositions."""
    out = []
    sign = 1
    i = j = 0
    while i < len(ia) and j < len(ib):
        if ia[i] < ib[j]:
            out.append(ia[i])
            i += 1
        else:
            out.append(ib[j])
            if (len(ia) - i) % 2:
                sign = -sign
            j += 1
    out.extend(ia[i:])
    out.extend(ib[j:])
    return tuple(out), sign


def interior(v: Sequence[Fraction], a: KForm) -> KForm:
    """Contraction of v into the first slot: (interior(v, a))(...) = a(v, ...)."""
    if a.degree == 0:
        raise ValueError("cannot contract a scalar")
    acc: dict[tuple[int, ...], Fraction] = {}
    for idx, c in a.terms.items():
        for t, i in enumerate(idx):
            vi = v[i - 1]
            if not vi:
                continue
            rest = idx[:t] + idx[t + 1:]
            coef = acc.get(rest, Fraction(0)) + (-1) ** t * vi * c
            if coef:
                acc[rest] = coef
            else:
                acc.pop(rest, None)
    return KForm(a.degree - 1, acc, a.n)


class LinearMap:
    """Endomorphism of R^n as an exact matrix; column j is the image of e_j."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Sequence[Sequence[object]]):
        n = len(rows)
        grid = tuple(tuple(scal(x) for x in r) for r in rows)
        if any(len(r) != n for r in grid):
            raise ValueError("matrix must be square")
        self.rows = grid
        self.n = n

    @classmethod
    def identity(cls, n: int = DIM) -> "LinearMap":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scaling(cls, c, n: int = DIM) -> "LinearMap":
        c = scal(c)
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[object]]) -> "LinearMap":
        n = len(cols)
        return cls([[scal(cols[j][i]) for j in range(n)] for i in range(n)])

    @classmethod
    def from_images(cls, images: Mapping[int, Sequence[Fraction]], n: int = DIM) -> "LinearMap":
        """Build from 1-based assignments e_j -> vector; unspecified j map to e_j."""
        cols = [list(basis_vector(j, n)) for j in range(1, n + 1)]
        for j, image in images.items():
            cols[j - 1] = [scal(x) for x in image]
        return cls.from_cols(cols)

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.rows[i][j] for i in range(self.n))

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(sum(r[j] * v[j] for j in range(self.n)) for r in self.rows)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other (matrix product self * other)."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        ot = list(zip(*other.rows))
        return LinearMap([[sum(a * b for a, b in zip(row, col)) for col in ot]
                          for row in self.rows])

    __matmul__ = compose

    def transpose(self) -> "LinearMap":
        return LinearMap(list(zip(*self.rows)))

    def det(self) -> Fraction:
        return _det([list(r) for r in self.rows])

    def is_invertible(self) -> bool:
        return self.det() != 0

    def inverse(self) -> "LinearMap":
        inv = _invert([list(r) for r in self.rows])
        if inv is None:
            raise ValueError("matrix is singular")
        return LinearMap(inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __neg__(self) -> "LinearMap":
        return LinearMap([[-x for x in r] for r in self.rows])

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return LinearMap([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + (-other)

    def to_json(self) -> dict:
        return {"cols": [[str(self.rows[i][j]) for i in range(self.n)]
                         for j in range(self.n)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LinearMap":
        try:
            cols = data["cols"]
            return cls.from_cols([[scal(x) for x in c] for c in cols])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed LinearMap JSON: {exc}") from exc

    def __repr__(self):
        return "LinearMap([" + ", ".join(str([str(x) for x in r]) for r in self.rows) + "])"


def pullback(g: LinearMap, a: KForm) -> KForm:
    """(g* a)(v1,...,vk) = a(g v1,...,g vk); g may be singular.

    Computed through k x k minors of the matrix, so coefficients stay exact.
    """
    if g.n != a.n:
        raise ValueError("dimension mismatch")
    k = a.degree
    if k == 0:
        return a
    cols = list(combinations(range(1, a.n + 1), k))
    acc: dict[tuple[int, ...], Fraction] = {}
    for idx, c in a.terms.items():
        rows = [g.rows[i - 1] for i in idx]
        for J in cols:
            minor = _det([[row[j - 1] for j in J] for row in rows])
            if not minor:
                continue
            s = acc.get(J, Fraction(0)) + c * minor
            if s:
                acc[J] = s
            else:
                acc.pop(J, None)
    return KForm(k, acc, a.n)


# --- exact dense linear algebra helpers -------------------------------------

def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    a = [row[:] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    return det


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]] | None:
    n = len(m)
    a = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _integer_rows(m: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row (does not change the nullspace)."""
    out = []
    for row in m:
        row = [scal(x) for x in row]
        lcm = 1
        for x in row:
            if x:
                d = x.denominator
                lcm = lcm * d // _gcd(lcm, d)
        out.append([int(x * lcm) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def kernel(m: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Exact basis of {x : m x = 0} via fraction-free (Bareiss) elimination.

    Accepts any rows x cols rational matrix; returns primitive integer-scaled
    vectors, one per free column.
    """
    rows = _integer_rows(m)
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    if nc == 0:
        return []
    if nr == 0:
        return [tuple(scal(1 if j == i else 0) for j in range(nc)) for i in range(nc)]

    a = [row[:] for row in rows]
    pivots: list[tuple[int, int]] = []  # (row, col) in echelon order
    prev = 1
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nr):
            head = a[i][c]
            for j in range(c, nc):
                # Bareiss update: exact integer division by the previous pivot
                a[i][j] = (a[r][c] * a[i][j] - head * a[r][j]) // prev
        prev = a[r][c]
        pivots.append((r, c))
        r += 1
        if r == nr:
            break

    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(nc) if c not in pivot_cols]
    basis: list[tuple[Fraction, ...]] = []
    for fc in free_cols:
        x = [Fraction(0)] * nc
        x[fc] = Fraction(1)
        for (pr, pc) in reversed(pivots):
            s = sum((a[pr][j] * x[j] for j in range(pc + 1, nc)), Fraction(0))
            x[pc] = -s / Fraction(a[pr][pc])
        basis.append(_primitive(x))
    return basis


def _primitive(x: list[Fraction]) -> tuple[Fraction, ...]:
    """Scale a rational vector to a primitive integer vector (first nonzero > 0)."""
    lcm = 1
    for v in x:
        if v:
            lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in x]
    g = 0
    for v in ints:
        g = _gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    rows = _integer_rows(m)
    if not rows:
        return 0
    return len(rows[0]) - len(kernel(rows))


class SymmetricMatrix:
    """n x n exact symmetric matrix (used for induced bilinear forms)."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Sequence[Sequence[object]]):
        grid = tuple(tuple(scal(x) for x in r) for r in rows)
        n = len(grid)
        if any(len(r) != n for r in grid):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if grid[i][j] != grid[j][i]:
                    raise ValueError("matrix is not symmetric")
        self.rows = grid
        self.n = n

    def __eq__(self, other):
        return isinstance(other, SymmetricMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SymmetricMatrix([" + ", ".join(str([str(x) for x in r]) for r in self.rows) + "])"


def signature(s: SymmetricMatrix | Sequence[Sequence[object]]) -> tuple[int, int, int]:
    """Exact (positive, negative, zero) inertia by congruence diagonalization.

    Symmetric pivoting; when every remaining diagonal entry vanishes but some
    off-diagonal s[i][j] does not, the row/column addition trick turns the
    hyperbolic 2x2 block into one positive and one negative square.
    """
    if not isinstance(s, SymmetricMatrix):
        s = SymmetricMatrix(s)
    n = s.n
    a = [list(r) for r in s.rows]
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            hyp = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j]:
                        hyp = (i, j)
                        break
                if hyp:
                    break
            if hyp is None:
                break  # remaining block is zero
            i, j = hyp
            # row/col addition makes a nonzero diagonal entry: a[i][i] becomes 2*a[i][j]
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for t in range(n):
                a[t][k], a[t][piv] = a[t][piv], a[t][k]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / d
                for t in range(n):
                    a[i][t] -= f * a[k][t]
                for t in range(n):
                    a[t][i] -= f * a[t][k]
        k += 1
    return pos, neg, n - pos - neg
