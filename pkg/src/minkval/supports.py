"""Support-function evaluation and L_p algebra.

A `SupportEval` packages a positively homogeneous evaluation x -> value
together with its exponent p: for finite p the stored field is h(x)^p,
for p = inf it is h(x) itself.  Combination, signed powers and the
subadditivity / homogeneity certification checks live here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .geometry import DimensionMismatchError, frac

INF = math.inf


class NegativeInputError(ValueError):
    pass


def normalize_p(p):
    """Canonical exponent: int when integral, Fraction otherwise, inf as inf."""
    if p == INF:
        return INF
    q = frac(p)
    if q < 1:
        raise ValueError("exponent must be >= 1")
    if q.denominator == 1:
        return int(q)
    return q


def as_int(p) -> Optional[int]:
    """p as a Python int when it is an integer, else None."""
    if p == INF:
        return None
    q = frac(p)
    return int(q) if q.denominator == 1 else None


def signed_power(a, p):
    """sgn(a) |a|^p; exact for rational a and integer p."""
    if p == INF:
        raise ValueError("signed power undefined at p = inf")
    neg = a < 0
    mag = -a if neg else a
    q = as_int(p)
    if q is not None and not isinstance(mag, float):
        r = frac(mag) ** q
    else:
        r = float(mag) ** float(p)
    return -r if neg else r


def signed_root(a, p):
    """sgn(a) |a|^(1/p); identity at p=1, float otherwise."""
    if p == INF:
        raise ValueError("signed root undefined at p = inf")
    if p == 1:
        return a
    neg = a < 0
    mag = -a if neg else a
    r = float(mag) ** (1.0 / float(p))
    return -r if neg else r


@dataclass(frozen=True)
class SupportEval:
    """A p-homogeneous evaluation attached to a body construction.

    fn(x) returns the p-field value: h(x)^p for finite p, h(x) for p=inf.
    kind is one of polytope-backed, facet-sum, face-lattice-sum,
    affine-combination.  exact means rational output on rational input.
    body_degree records how the construction scales in its body argument
    (h_{op(sP)} = s^degree h_{op(P)}), None when not applicable.
    """

    n: int
    p: object
    fn: Callable
    kind: str
    exact: bool
    body_degree: object = None
    label: str = ""

    def value(self, x):
        """The stored p-field at x (h^p for finite p, h for p=inf)."""
        if len(x) != self.n:
            raise DimensionMismatchError("probe length mismatch")
        return self.fn(tuple(x))

    def support(self, x):
        """h(x); a signed p-th root of the field, so float for p >= 2."""
        v = self.value(x)
        if self.p == INF:
            return v
        return signed_root(v, self.p)

    __call__ = support

    @property
    def support_exact(self):
        """Whether support() stays rational on rational probes."""
        return self.exact and (self.p == 1 or self.p == INF)

    def describe(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "p": "inf" if self.p == INF else str(Fraction(self.p)),
            "exact": self.exact,
            "label": self.label,
        }


def from_polytope(P, p=1, label=""):
    """Support evaluation of a polytope, raised to the p-field."""
    p = normalize_p(p)
    q = as_int(p)
    if p == INF or p == 1:
        fn = P.support
    elif q is not None:
        fn = lambda x, _q=q: P.support(x) ** _q
    else:
        fn = lambda x, _p=float(p): float(P.support(x)) ** _p
    return SupportEval(n=P.n, p=p, fn=fn, kind="polytope-backed",
                       exact=(q is not None or p == INF), body_degree=1,
                       label=label or "polytope")


def lp_combine(h1, h2, p, c1=1, c2=1):
    """L_p combination of two nonnegative evaluations with body weights.

    Result field is c1^p h1^p + c2^p h2^p (so its support function is the
    L_p sum of c1-scaled and c2-scaled bodies); for p=inf the pointwise
    max of c1 h1 and c2 h2.  Weights must be nonnegative; a negative
    operand evaluation surfaces as NegativeInputError at probe time.
    """
    if h1.n != h2.n:
        raise DimensionMismatchError("operand dimensions differ")
    c1 = frac(c1)
    c2 = frac(c2)
    if c1 < 0 or c2 < 0:
        raise NegativeInputError("combination weights must be nonnegative")
    p = normalize_p(p)
    n = h1.n
    if p == INF:
        def fn(x):
            a = h1.support(x)
            b = h2.support(x)
            if a < 0 or b < 0:
                raise NegativeInputError("negative evaluation in max combination")
            return max(c1 * a, c2 * b)
        exact = h1.support_exact and h2.support_exact
    else:
        if h1.p != p or h2.p != p:
            raise ValueError("operands must carry the combination exponent")
        q = as_int(p)
        if q is not None:
            w1, w2 = c1 ** q, c2 ** q
        else:
            w1, w2 = float(c1) ** float(p), float(c2) ** float(p)

        def fn(x):
            a = h1.value(x)
            b = h2.value(x)
            if a < 0 or b < 0:
                raise NegativeInputError("negative evaluation in L_p combination")
            return w1 * a + w2 * b
        exact = h1.exact and h2.exact and q is not None
    return SupportEval(n=n, p=p, fn=fn, kind="affine-combination",
                       exact=exact, label=f"lp_combine[p={p}]")


def field_sum(terms, p, n, *, kind="affine-combination", body_degree=None, label=""):
    """Weighted sum of p-field evaluations; weights may be negative.

    Internal workhorse for face-lattice and difference-type constructions
    whose fields are signed; not a body combination, so no sign checks.
    """
    p = normalize_p(p)
    if p == INF:
        raise ValueError("field sums need a finite exponent")
    prepared = [(frac(c), h) for c, h in terms]
    for _, h in prepared:
        if h.n != n or h.p != p:
            raise DimensionMismatchError("term shape mismatch")
    exact = all(h.exact for _, h in prepared)

    def fn(x):
        return sum(c * h.value(x) for c, h in prepared)

    return SupportEval(n=n, p=p, fn=fn, kind=kind, exact=exact,
                       body_degree=body_degree, label=label or "field-sum")


def constant_zero(n, p, label="zero"):
    """The field of the one-point body {o}."""
    p = normalize_p(p)
    return SupportEval(n=n, p=p, fn=lambda x: Fraction(0), kind="polytope-backed",
                       exact=True, body_degree=None, label=label)


# ---------------------------------------------------------------------------
# probe sets


def sign_patterns(n, include_zero_coords=True):
    """All vectors in {-1,0,1}^n except the origin (no zeros if disabled)."""
    vals = (-1, 0, 1) if include_zero_coords else (-1, 1)
    return [v for v in itertools.product(vals, repeat=n) if any(v)]


def special_vectors(n):
    """Curated integer probes known to separate face-lattice sums."""
    base = [(1, 3, 3, 2), (1, 3, 2, 3), (2, 6, 5, 5)]
    out = []
    for v in base:
        if len(v) == n:
            out.append(v)
            out.append(tuple(-c for c in v))
    return out


def random_int_vectors(n, count, seed, bound=9):
    """Deterministic nonzero integer probes with entries in [-bound, bound]."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        v = tuple(int(c) for c in rng.integers(-bound, bound + 1, size=n))
        if any(v):
            out.append(v)
    return out


def probe_directions(n, count, seed=20260823):
    """Standard probe battery: sign patterns, curated vectors, random ints."""
    probes = []
    if n <= 4:
        probes.extend(sign_patterns(n))
    else:
        probes.extend(sign_patterns(n, include_zero_coords=False))
    probes.extend(special_vectors(n))
    seen = set(probes)
    for v in random_int_vectors(n, max(0, count - len(probes)) + 8, seed):
        if v not in seen:
            seen.add(v)
            probes.append(v)
        if len(probes) >= count:
            break
    return probes[:count]


# ---------------------------------------------------------------------------
# certification checks


@dataclass(frozen=True)
class SubadditivityReport:
    passed: bool
    witness: Optional[tuple]   # (x, y, h(x), h(y), h(x+y)) at the worst violation
    samples: int
    tol: float
    seed: int

    def to_json(self):
        out = {
            "check": "subadditivity",
            "pass": self.passed,
            "samples": self.samples,
            "tol": self.tol,
            "seed": self.seed,
        }
        if self.witness is not None:
            x, y, hx, hy, hxy = self.witness
            out["witness"] = {
                "x": [str(c) for c in x],
                "y": [str(c) for c in y],
                "h_x": float(hx),
                "h_y": float(hy),
                "h_x_plus_y": float(hxy),
            }
        return out


def _violation(h, x, y, tol, exact):
    hx = h.support(x)
    hy = h.support(y)
    hxy = h.support(tuple(a + b for a, b in zip(x, y)))
    if exact:
        bad = hxy > hx + hy
        gap = hxy - hx - hy
    else:
        gap = float(hxy) - float(hx) - float(hy)
        bad = gap > tol
    return (bad, gap, (x, y, hx, hy, hxy))


def subadditivity_check(h, samples=200, tol=1e-9, seed=20260823):
    """Probe h(x+y) <= h(x) + h(y) on adversarial and random pairs.

    Adversarial set: all sign patterns (n <= 4), curated integer vectors,
    and their pairwise combinations against coordinate directions; checked
    exactly when the evaluation is exact at p=1.  Random set: seeded unit
    sphere pairs at the given tolerance.
    """
    n = h.n
    exact = h.support_exact
    adversarial = []
    patterns = sign_patterns(n) if n <= 4 else sign_patterns(n, False)
    patterns = patterns + special_vectors(n)
    for x in patterns:
        for y in patterns:
            adversarial.append((x, y))
    worst = None
    worst_gap = 0
    for x, y in adversarial:
        bad, gap, wit = _violation(h, x, y, tol, exact)
        if bad and gap > worst_gap:
            worst_gap, worst = gap, wit
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        u = rng.normal(size=n)
        v = rng.normal(size=n)
        x = tuple(Fraction(c).limit_denominator(10 ** 6) for c in u / np.linalg.norm(u))
        y = tuple(Fraction(c).limit_denominator(10 ** 6) for c in v / np.linalg.norm(v))
        bad, gap, wit = _violation(h, x, y, tol, exact=False)
        if bad and gap > worst_gap:
            worst_gap, worst = gap, wit
    return SubadditivityReport(passed=worst is None, witness=worst,
                               samples=samples + len(adversarial), tol=tol, seed=seed)


def homogeneity_check(op, q, bodies, scales=(Fraction(1, 2), 2, 3),
                      probes=None, tol=1e-9, seed=20260823):
    """Whether h_{op(sP)}(x) = s^q h_{op(P)}(x) over the sampled grid."""
    q = frac(q)
    for P in bodies:
        base = op(P)
        if probes is None:
            xs = probe_directions(P.n, 24, seed)
        else:
            xs = probes
        for s in scales:
            s = frac(s)
            scaled = op(P.scale(s))
            factor = float(s) ** float(q)
            for x in xs:
                a = float(scaled.support(x))
                b = factor * float(base.support(x))
                if abs(a - b) > tol * max(1.0, abs(a), abs(b)):
                    return False
    return True
