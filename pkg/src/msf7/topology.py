"""Decision procedures for the existence of global 3-forms of each type.

A :class:`CohomologyModel` carries the free parts of the degree-2 and
degree-4 cohomology of a closed connected 7-manifold, the cup product
between them, the first Pontryagin vector, the mod-2 reduction of the
second Stiefel-Whitney class, and orientation/spin flags.  `check_type`
decides the published criteria:

    types 5..8  orientable and spin (all four equivalent; no search)
    type 3      integral third Stiefel-Whitney class vanishes
    type 4      spin and cup(e, e) = p1/2 for some degree-2 class e
    type 2      (simply connected) spin and cup(e,e)+cup(f,f)+cup(e,f) = p1/2
    type 1      (simply connected) e+f = w2 mod 2 and cup(e,e)+cup(f,f) = p1

Searches run over integer coordinate boxes, enumerated by max-norm shells in
lexicographic order so the reported witness is deterministic and independent
of the bound.  NO is only returned with a proof: a divisibility obstruction,
an identically-zero form against a nonzero target, or a positive/negative
definite functional of the cup form whose coordinate bounds fall inside the
searched box.  Anything else unresolved at the bound is UNKNOWN.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import product

from .exterior import LinearMap, signature

ADMITS = "ADMITS"
NO = "NO"
UNKNOWN = "UNKNOWN"

DEFAULT_BOUND = 16


class HypothesisError(ValueError):
    """A theorem hypothesis (orientability / simple connectivity) is not met."""


class ModelError(ValueError):
    """Malformed or inconsistent cohomology data."""


@dataclass(frozen=True)
class CohomologyModel:
    name: str
    r2: int
    r4: int
    cup: tuple          # cup[i][j]: length-r4 integer vector for generators i, j
    p1: tuple           # length r4
    w2: tuple           # length r2, entries mod 2
    orientable: bool
    spin: bool
    W3_zero: bool
    simply_connected: bool


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: tuple | None   # tuple of coordinate tuples, present iff ADMITS
    bound_used: int
    reason: str = ""

    def to_json(self) -> dict:
        out = {"status": self.status, "bound_used": self.bound_used}
        if self.witness is not None:
            out["witness"] = [list(v) for v in self.witness]
        if self.reason:
            out["reason"] = self.reason
        return out


def make_model(data: dict) -> CohomologyModel:
    """Validate raw model data (symmetry, lengths, flag consistency)."""
    try:
        name = str(data.get("name", "unnamed"))
        r2 = int(data["r2"])
        r4 = int(data["r4"])
        cup_raw = data["cup"]
        p1 = tuple(int(x) for x in data["p1"])
        w2 = tuple(int(x) % 2 for x in data["w2"])
        orientable = bool(data["orientable"])
        spin = bool(data["spin"])
        w3_zero = bool(data["W3_zero"])
        simply_connected = bool(data["simply_connected"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"malformed cohomology model: {exc}") from exc
    if r2 < 0 or r4 < 0:
        raise ModelError("ranks must be nonnegative")
    if len(cup_raw) != r2 or any(len(row) != r2 for row in cup_raw):
        raise ModelError(f"cup tensor must be {r2} x {r2}")
    cup = tuple(tuple(tuple(int(x) for x in cell) for cell in row) for row in cup_raw)
    for i in range(r2):
        for j in range(r2):
            if len(cup[i][j]) != r4:
                raise ModelError(f"cup[{i}][{j}] must have length {r4}")
            if cup[i][j] != cup[j][i]:
                raise ModelError(f"cup tensor is not symmetric at ({i},{j})")
    if len(p1) != r4:
        raise ModelError(f"p1 must have length {r4}")
    if len(w2) != r2:
        raise ModelError(f"w2 must have length {r2}")
    if spin and any(w2):
        raise ModelError("spin model must have w2 = 0")
    if spin and not w3_zero:
        raise ModelError("spin model must have W3_zero (beta of zero is zero)")
    if simply_connected and not orientable:
        raise ModelError("a simply connected manifold is orientable")
    return CohomologyModel(name, r2, r4, cup, p1, w2, orientable, spin,
                           w3_zero, simply_connected)


def load_model(path) -> CohomologyModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ModelError(f"cannot read model file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ModelError(f"model file is not valid JSON: {exc}") from exc
    return make_model(data)


def bundled_model_names() -> list[str]:
    root = resources.files("msf7").joinpath("models")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def bundled_model(name: str) -> CohomologyModel:
    path = resources.files("msf7").joinpath("models", f"{name}.json")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ModelError(f"no bundled model named {name!r}") from exc
    return make_model(data)


def cup_eval(model: CohomologyModel, e, f) -> tuple[int, ...]:
    """Bilinear symmetric evaluation of the cup tensor on degree-2 classes."""
    e = [int(x) for x in e]
    f = [int(x) for x in f]
    if len(e) != model.r2 or len(f) != model.r2:
        raise ValueError(f"coordinate vectors must have length {model.r2}")
    out = [0] * model.r4
    for i, ei in enumerate(e):
        if not ei:
            continue
        for j, fj in enumerate(f):
            if not fj:
                continue
            c = ei * fj
            for k, v in enumerate(model.cup[i][j]):
                out[k] += c * v
    return tuple(out)


# --- bounded search with proofs -------------------------------------------------

def _shell_vectors(dim: int, bound: int):
    """All integer vectors with max-norm <= bound, by shell then lexicographic."""
    if dim == 0:
        yield ()
        return
    for shell in range(bound + 1):
        for v in product(range(-shell, shell + 1), repeat=dim):
            if max((abs(x) for x in v), default=0) == shell:
                yield v


def _quadratic_matrix(q, dim: int) -> list[list[Fraction]]:
    """Symmetric matrix of a scalar quadratic form given as a callable."""
    def unit(i):
        return tuple(1 if k == i else 0 for k in range(dim))

    m = [[Fraction(0)] * dim for _ in range(dim)]
    diag = [Fraction(q(unit(i))) for i in range(dim)]
    for i in range(dim):
        m[i][i] = diag[i]
    for i in range(dim):
        for j in range(i + 1, dim):
            s = Fraction(q(tuple(1 if k in (i, j) else 0 for k in range(dim))))
            m[i][j] = m[j][i] = (s - diag[i] - diag[j]) / 2
    return m


def _definite_exhaustion_bound(qvec, dim: int, r4: int, target) -> int | None:
    """If some +-coordinate or +-sum functional of the vector-valued quadratic
    form is definite, return a box bound containing all integer solutions of
    qvec(x) = target (None if no definite functional is found).

    A negative functional value with a positive definite form returns 0: no
    nonzero solution can exist and x = 0 is checked separately.
    """
    if dim == 0:
        return 0
    functionals = []
    for c in range(r4):
        lam = [0] * r4
        lam[c] = 1
        functionals.append(tuple(lam))
        functionals.append(tuple(-x for x in lam))
    if r4 > 1:
        functionals.append(tuple([1] * r4))
        functionals.append(tuple([-1] * r4))
    for lam in functionals:
        def q_scalar(x, _lam=lam):
            vals = qvec(x)
            return sum(l * v for l, v in zip(_lam, vals))

        m = _quadratic_matrix(q_scalar, dim)
        pos, neg, null = signature(m)
        if pos != dim:
            continue
        s = sum(l * t for l, t in zip(lam, target))
        if s < 0:
            return 0
        inv = LinearMap(m).inverse()
        box = 0
        for i in range(dim):
            # max of x_i^2 on {x^T m x <= s} is s * (m^-1)_ii
            cap = Fraction(s) * inv.rows[i][i]
            b = math.isqrt(cap.numerator // cap.denominator)
            while (b + 1) * (b + 1) * cap.denominator <= cap.numerator:
                b += 1
            box = max(box, b)
        return box
    return None


def _search(model: CohomologyModel, dim: int, qvec, target, extra_ok, bound: int,
            witness_split) -> Verdict:
    """Shared bounded search: find x with qvec(x) == target and extra_ok(x)."""
    target = tuple(target)
    for x in _shell_vectors(dim, bound):
        if qvec(x) == target and extra_ok(x):
            return Verdict(ADMITS, witness_split(x), bound)
    if all(v == 0 for row in model.cup for cell in row for v in cell):
        if any(target):
            return Verdict(NO, None, bound,
                           "cup form is identically zero but the target class is not")
        # target zero and form zero: the congruence side must have failed
        return Verdict(UNKNOWN, None, bound,
                       "no admissible congruence representative in the box")
    box = _definite_exhaustion_bound(qvec, dim, model.r4, target)
    if box is not None and box <= bound:
        return Verdict(NO, None, bound,
                       f"definite functional bounds all solutions by {box}; "
                       "search was exhaustive")
    return Verdict(UNKNOWN, None, bound, "bounded search inconclusive")


def _halved(p1: tuple) -> tuple | None:
    if any(v % 2 for v in p1):
        return None
    return tuple(v // 2 for v in p1)


def check_type(model: CohomologyModel, type_id: int, bound: int = DEFAULT_BOUND) -> Verdict:
    """Decide whether the model admits a global 3-form of the given type.

    Raises HypothesisError when the relevant theorem's standing hypotheses
    (orientability for types 3..8, simple connectivity for types 1 and 2)
    are not satisfied; criteria failures return NO instead.
    """
    if type_id not in range(1, 9):
        raise ValueError(f"type must be 1..8, got {type_id}")
    if bound < 1:
        raise ValueError("bound must be positive")

    if type_id in (5, 6, 7, 8):
        if not model.orientable:
            raise HypothesisError("theorem hypothesis not met: model is not orientable")
        if model.spin:
            return Verdict(ADMITS, (), bound, "orientable and spin")
        return Verdict(NO, None, bound, "second Stiefel-Whitney class is nonzero")

    if type_id == 3:
        if not model.orientable:
            raise HypothesisError("theorem hypothesis not met: model is not orientable")
        if model.W3_zero:
            return Verdict(ADMITS, (), bound, "integral third Stiefel-Whitney class vanishes")
        return Verdict(NO, None, bound, "integral third Stiefel-Whitney class is nonzero")

    if type_id == 4:
        if not model.orientable:
            raise HypothesisError("theorem hypothesis not met: model is not orientable")
        if not model.spin:
            return Verdict(NO, None, bound, "second Stiefel-Whitney class is nonzero")
        half = _halved(model.p1)
        if half is None:
            return Verdict(NO, None, bound, "p1 is not divisible by 2")
        return _search(model, model.r2,
                       lambda e: cup_eval(model, e, e), half,
                       lambda e: True, bound, lambda e: (e,))

    if not model.simply_connected:
        raise HypothesisError("theorem hypothesis not met: model is not simply connected")

    r2 = model.r2

    def split(x):
        return (x[:r2], x[r2:])

    if type_id == 2:
        if not model.spin:
            return Verdict(NO, None, bound, "second Stiefel-Whitney class is nonzero")
        half = _halved(model.p1)
        if half is None:
            return Verdict(NO, None, bound, "p1 is not divisible by 2")

        def q2(x):
            e, f = split(x)
            return tuple(a + b + c for a, b, c in zip(cup_eval(model, e, e),
                                                      cup_eval(model, f, f),
                                                      cup_eval(model, e, f)))

        return _search(model, 2 * r2, q2, half, lambda x: True, bound, split)

    # type 1
    def q1(x):
        e, f = split(x)
        return tuple(a + b for a, b in zip(cup_eval(model, e, e),
                                           cup_eval(model, f, f)))

    def congruent(x):
        e, f = split(x)
        return all((a + b - w) % 2 == 0 for a, b, w in zip(e, f, model.w2))

    return _search(model, 2 * r2, q1, tuple(model.p1), congruent, bound, split)


def verify_witness(model: CohomologyModel, type_id: int, witness) -> bool:
    """Closed-loop check: substitute an ADMITS witness back into the criterion."""
    if type_id in (3, 5, 6, 7, 8):
        return True
    if type_id == 4:
        (e,) = witness
        half = _halved(model.p1)
        return half is not None and cup_eval(model, e, e) == half
    if type_id == 2:
        e, f = witness
        half = _halved(model.p1)
        got = tuple(a + b + c for a, b, c in zip(cup_eval(model, e, e),
                                                 cup_eval(model, f, f),
                                                 cup_eval(model, e, f)))
        return half is not None and got == half
    if type_id == 1:
        e, f = witness
        got = tuple(a + b for a, b in zip(cup_eval(model, e, e),
                                          cup_eval(model, f, f)))
        cong = all((a + b - w) % 2 == 0 for a, b, w in zip(e, f, model.w2))
        return cong and got == tuple(model.p1)
    raise ValueError(f"type must be 1..8, got {type_id}")
