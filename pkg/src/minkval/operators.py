"""Valuation operators on polytopes containing the origin.

Projection-type maps (symmetric, origin-symmetrized, one-sided L_p and
L_inf), moment maps, face-lattice sums, generalized difference bodies,
and the classified operator families built from them.  Exact rational
evaluation wherever the exponent is an integer; Monte-Carlo fallback for
fractional moment exponents.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import (
    GeometryError,
    OriginNotInteriorError,
    Polytope,
    RayOutsideBodyError,
    SingularMapError,
    dot,
    frac,
    in_span,
    is_zero_vec,
    solve_linear,
    span_basis,
    vec,
    vneg,
    vscale,
    vsub,
    zero_vec,
)
from .supports import (
    INF,
    SupportEval,
    as_int,
    constant_zero,
    field_sum,
    from_polytope,
    lp_combine,
    normalize_p,
    signed_power,
)


class LowerDimensionalError(GeometryError):
    pass


class OriginConditionViolatedError(GeometryError):
    pass


class ConstraintViolationError(ValueError):
    pass


class FamilyDimensionMismatchError(ValueError):
    pass


def _cache(P, key, build):
    if key not in P._ops:
        P._ops[key] = build()
    return P._ops[key]


# ---------------------------------------------------------------------------
# projection-type operators (contravariant)


def projection_body(P, strict=False):
    """Symmetric projection operator as a 1-field.

    h(x) is half the facet sum of |x . normal| weighted by facet measure.
    Lower-dimensional bodies carry the two-sided degenerate area measure,
    so a body of dimension n-1 still has a nonzero image (a segment body);
    anything flatter maps to {o}.  strict=True keeps the full-dimensional
    precondition and raises instead.
    """
    def build():
        n = P.n
        if P.dim == n:
            atoms = [(f.normal, f.weight / 2) for f in P.facets]
        elif P.dim == n - 1:
            if strict:
                raise LowerDimensionalError("projection operator needs a full-dimensional body")
            N0, t = P.surface_atom()
            atoms = [(N0, t)]
        else:
            if strict:
                raise LowerDimensionalError("projection operator needs a full-dimensional body")
            atoms = []

        def fn(x):
            return sum((c * abs(dot(x, N)) for N, c in atoms), Fraction(0))

        return SupportEval(n=n, p=1, fn=fn, kind="facet-sum", exact=True,
                           body_degree=n - 1, label="projection_body")
    if strict and P.dim < P.n:
        raise LowerDimensionalError("projection operator needs a full-dimensional body")
    return _cache(P, ("proj",), build)


def lp_projection_body(P, p, sign=1, strict=False):
    """One-sided L_p projection operator as a p-field.

    Field value: sum over facets off the origin of max{sign x . u, 0}^p
    times h(u)^(1-p) times facet measure; with primitive integer normals
    the normalizations cancel, so integer p stays rational.  Vanishes on
    lower-dimensional bodies (their support measure sits on the origin
    cone, which the defining domain excludes).
    """
    p = normalize_p(p)
    if p == INF:
        raise ValueError("use the vertex form for the limiting operator")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if strict and P.dim < P.n:
        raise LowerDimensionalError("one-sided projection needs a full-dimensional body")

    def build():
        n = P.n
        q = as_int(p)
        atoms = []
        if P.dim == n:
            for f in P.facets:
                if f.offset > 0:
                    if q is not None:
                        c = f.weight / f.offset ** (q - 1)
                    else:
                        c = float(f.weight) * float(f.offset) ** (1.0 - float(p))
                    atoms.append((f.normal, c))
        exact = q is not None

        def fn(x):
            total = Fraction(0) if exact else 0.0
            for N, c in atoms:
                s = sign * dot(x, N)
                if s > 0:
                    total += c * (s ** q if exact else float(s) ** float(p))
            return total

        deg = Fraction(n, q) - 1 if q is not None else n / float(p) - 1
        return SupportEval(n=n, p=p, fn=fn, kind="facet-sum", exact=exact,
                           body_degree=deg, label=f"lp_projection_body[p={p},sign={sign:+d}]")
    return _cache(P, ("lp_proj", p, sign), build)


def origin_projection_body(P, strict=False):
    """Projection operator re-centered by the one-sided part (a 1-field).

    h = h_projection - h_one_sided(+); on [0,1]^3 this gives [-1,0]^3.
    """
    if strict and P.dim < P.n:
        raise LowerDimensionalError("origin projection needs a full-dimensional body")

    def build():
        base = projection_body(P)
        one = lp_projection_body(P, 1, 1)

        def fn(x):
            return base.value(x) - one.value(x)

        return SupportEval(n=P.n, p=1, fn=fn, kind="facet-sum", exact=True,
                           body_degree=P.n - 1, label="origin_projection_body")
    return _cache(P, ("proj_o",), build)


def linf_projection_body(P, sign=1):
    """Limiting one-sided projection operator, as a polytope.

    Hull of the origin and normal/offset for every facet off the origin;
    exact because the unnormalized normal divided by the unnormalized
    offset cancels the normalization.  Lower-dimensional bodies map to
    {o}.  sign=-1 reflects through the origin.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")

    def build():
        n = P.n
        pts = [zero_vec(n)]
        if P.dim == n:
            for f in P.facets:
                if f.offset > 0:
                    pts.append(tuple(Fraction(a) / f.offset for a in f.normal))
        if sign == -1:
            pts = [vneg(q) for q in pts]
        return Polytope(n, pts)
    return _cache(P, ("linf_proj", sign), build)


def polar_body(K):
    """Dual body {y : y . v <= 1 for every vertex v}.

    Independent construction (vertex enumeration over tight constraint
    subsets); requires the origin strictly inside.
    """
    if K.origin_location() != "interior":
        raise OriginNotInteriorError("polar body needs the origin strictly inside")
    n = K.n
    verts = K.vertices
    ones = [Fraction(1)] * n
    out = []
    for S in itertools.combinations(verts, n):
        try:
            y = solve_linear(list(S), ones)
        except SingularMapError:
            continue
        if all(dot(y, v) <= 1 for v in verts):
            out.append(y)
    return Polytope(n, out)


# ---------------------------------------------------------------------------
# moment-type operators (covariant)


def _pospow(t, q):
    if t <= 0:
        return Fraction(0)
    return frac(t) ** q


def _divdiff_pospow(nodes, q):
    """Divided difference of t -> max(t,0)^q over possibly repeated nodes."""
    z = sorted(nodes)
    k = len(z)
    if z[-1] <= 0:
        return Fraction(0)
    if all(z[i] != z[i + 1] for i in range(k - 1)):
        total = Fraction(0)
        for i in range(k):
            t = z[i]
            if t <= 0:
                continue
            den = 1
            for j in range(k):
                if j != i:
                    den *= t - z[j]
            total += frac(t) ** q / den
        return total
    col = [_pospow(t, q) for t in z]
    for j in range(1, k):
        nxt = []
        for i in range(k - j):
            if z[i + j] == z[i]:
                nxt.append(math.comb(q, j) * _pospow(z[i], q - j))
            else:
                nxt.append((col[i + 1] - col[i]) / (z[i + j] - z[i]))
        col = nxt
    return col[0]


def moment_body(P, p, sign=1, samples=200_000, seed=20260823):
    """One-sided moment operator as a p-field.

    Field value is the integral over the body of max{sign x . y, 0}^p.
    Integer p is exact: per triangulation simplex the integral reduces to
    a confluent divided difference of t -> max(t,0)^(p+n) at the vertex
    values of x . y, scaled by the simplex determinant.  Fractional p
    falls back to the seeded Monte-Carlo estimate and is approximate.
    """
    p = normalize_p(p)
    if p == INF:
        raise ValueError("use the vertex form for the limiting operator")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    q = as_int(p)
    n = P.n

    if q is None:
        deg = n / float(p) + 1

        def fn_mc(x):
            return moment_field_mc(P, p, x, sign=sign, samples=samples, seed=seed)[0]

        return SupportEval(n=n, p=p, fn=fn_mc, kind="facet-sum", exact=False,
                           body_degree=deg, label=f"moment_body[p={p},sign={sign:+d},mc]")

    def build():
        deg = Fraction(n, q) + 1
        if P.dim < n:
            return SupportEval(n=n, p=q, fn=lambda x: Fraction(0), kind="facet-sum",
                               exact=True, body_degree=deg,
                               label=f"moment_body[p={q},sign={sign:+d}]")
        ints, den = P.iscale()
        lookup = dict(zip(P._pts, ints))
        cells = []
        for simplex in P.triangulation():
            w = [lookup[v] for v in simplex]
            rows = [[a - b for a, b in zip(w[i], w[0])] for i in range(1, n + 1)]
            adet = abs(_int_det(rows))
            if adet:
                cells.append((adet, w))
        scale = Fraction(math.factorial(q), math.factorial(q + n) * den ** (n + q))

        def fn(x):
            total = Fraction(0)
            for adet, w in cells:
                nodes = [sign * sum(a * b for a, b in zip(x, v)) for v in w]
                d = _divdiff_pospow(nodes, q + n)
                if d:
                    total += adet * d
            return total * scale

        return SupportEval(n=n, p=q, fn=fn, kind="facet-sum", exact=True,
                           body_degree=deg, label=f"moment_body[p={q},sign={sign:+d}]")
    return _cache(P, ("moment", q, sign), build)


def _int_det(rows):
    """Integer determinant by fraction-free elimination (Bareiss)."""
    m = [list(r) for r in rows]
    k = len(m)
    sign = 1
    prev = 1
    for c in range(k - 1):
        if m[c][c] == 0:
            piv = next((i for i in range(c + 1, k) if m[i][c] != 0), None)
            if piv is None:
                return 0
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return sign * m[-1][-1]


def moment_field_mc(P, p, x, sign=1, samples=100_000, seed=20260823):
    """Monte-Carlo estimate of the one-sided moment p-field at x.

    Returns (estimate, standard_error).  Sampling: pick a triangulation
    simplex with probability proportional to volume, then a uniform
    barycentric point.  Deterministic for fixed seed.
    """
    if P.dim < P.n:
        return 0.0, 0.0
    n = P.n
    tri = P.triangulation()
    Vs = [np.array([[float(c) for c in v] for v in s]) for s in tri]
    vols = np.array([abs(np.linalg.det(V[1:] - V[0])) for V in Vs])
    vols /= vols.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(samples, vols)
    xf = np.array([float(c) for c in x]) * sign
    vals = np.empty(samples)
    pos = 0
    for V, cnt in zip(Vs, counts):
        if cnt == 0:
            continue
        W = rng.dirichlet(np.ones(n + 1), size=cnt)
        t = (W @ V) @ xf
        vals[pos:pos + cnt] = np.maximum(t, 0.0) ** float(p)
        pos += cnt
    vol = float(P.volume)
    est = vol * float(vals.mean())
    se = vol * float(vals.std(ddof=1)) / math.sqrt(samples)
    return est, se


def linf_moment_body(P, sign=1):
    """Limiting moment operator: the body itself when full-dimensional
    (its reflection for sign=-1), otherwise {o}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if P.dim == P.n:
        return P if sign == 1 else P.reflect()
    return Polytope(P.n, [zero_vec(P.n)])


# ---------------------------------------------------------------------------
# face-lattice sums and difference bodies


def face_sum_valuation(P, p, a1, a2):
    """Alternating face-lattice sum as a p-field.

    lead * h_P^p + (a2-a1) * sum over 1 <= j < dim P of (-1)^j times the
    h^p sum over j-faces containing the origin, where lead is a1 for odd
    dim and 2 a2 - a1 for even dim.  The point body maps to the zero
    field.
    """
    p = normalize_p(p)
    if p == INF:
        raise ValueError("face sums need a finite exponent")
    a1 = frac(a1)
    a2 = frac(a2)
    n = P.n
    d = P.dim
    if d == 0:
        return constant_zero(n, p, label="face_sum[point]")
    q = as_int(p)
    lead = a1 if d % 2 == 1 else 2 * a2 - a1
    diff = a2 - a1
    terms = [(lead, P)]
    if diff != 0:
        for j in range(1, d):
            coeff = diff * (-1) ** j
            for fverts in P.faces_through_origin(j):
                terms.append((coeff, Polytope(n, fverts, pruned=True)))
    exact = q is not None

    def fn(x):
        total = Fraction(0) if exact else 0.0
        for c, F in terms:
            h = F.support(x)
            if h:
                total += c * (h ** q if exact else float(h) ** float(p))
        return total

    return SupportEval(n=n, p=p, fn=fn, kind="face-lattice-sum", exact=exact,
                       body_degree=1, label=f"face_sum[p={p}]")


def face_sum_closed_form(v0, d, m, x, p, a1, a2, b1, b2):
    """Closed form of the face-lattice sums of the simplex [v0, e1..e_d].

    Requires the origin in the relative interior of [v0, e1..e_m] (so v0
    has strictly negative entries in the first m coordinates and zeros
    elsewhere; m=0 forces v0 = o).  Returns the pair (value for the
    simplex with weights a1, a2; value for its reflection with b1, b2),
    evaluated at x with signed powers.
    """
    v0 = vec(v0)
    x = vec(x)
    n = len(x)
    if len(v0) != n or not 1 <= d <= n or not 0 <= m <= d:
        raise ValueError("bad shape arguments")
    ok = all(v0[i] < 0 for i in range(m)) and all(v0[i] == 0 for i in range(m, n))
    if not ok:
        raise OriginConditionViolatedError(
            "origin not in the relative interior of the base face")
    a1, a2, b1, b2 = frac(a1), frac(a2), frac(b1), frac(b2)

    def sp(t):
        return signed_power(t, p)

    alpha_set = [dot(v0, x)] + [x[i] for i in range(m)]
    al1 = sp(max(alpha_set))
    al2 = sp(min(alpha_set))
    if m == d:
        lead_a = a1 if d % 2 == 1 else 2 * a2 - a1
        lead_b = b1 if d % 2 == 1 else 2 * b2 - b1
        return lead_a * al1, lead_b * (-al2)
    beta_set = [x[i] for i in range(m, d)]
    be1 = sp(max(beta_set))
    be2 = sp(min(beta_set))
    sgn = (-1) ** m
    a_val = a2 * max(al1, be1) - sgn * (a2 - a1) * max(al1, be2) + sgn * (a2 - a1) * al1
    b_val = b2 * max(-al2, -be2) - sgn * (b2 - b1) * max(-al2, -be1) + sgn * (b2 - b1) * (-al2)
    return a_val, b_val


def _check_difference_params(a1, a2, b1, b2):
    if min(a1, a2, b1, b2) < 0:
        raise ConstraintViolationError("difference-body weights must be nonnegative")
    if a1 > a2 or b1 > b2:
        raise ConstraintViolationError("difference-body weights must be ordered")
    if a2 - a1 > b2 or b2 - b1 > a2:
        raise ConstraintViolationError("difference-body cross constraints violated")


def difference_body(P, a1, a2, b1, b2, checked=True):
    """Generalized difference body of a 3-dimensional-ambient body, as a 1-field.

    Sum of the face-lattice valuation of P with weights (a1, a2) and of
    the reflected body with weights (b1, b2).  checked mode enforces
    a1 <= a2, b1 <= b2, a2-a1 <= b2, b2-b1 <= a2 and nonnegativity, the
    exact region where the field stays a support function for every body.
    """
    if P.n != 3:
        raise FamilyDimensionMismatchError("difference body is a 3-dimensional construction")
    a1, a2, b1, b2 = frac(a1), frac(a2), frac(b1), frac(b2)
    if checked:
        _check_difference_params(a1, a2, b1, b2)
    fa = face_sum_valuation(P, 1, a1, a2)
    fb = face_sum_valuation(P.reflect(), 1, b1, b2)
    return field_sum([(1, fa), (1, fb)], 1, P.n, kind="face-lattice-sum",
                     body_degree=1, label="difference_body")


def difference_body_simplex(T, a1, a2, b1, b2, checked=True):
    """Generalized difference body of a simplex [o, v1..vd], as a polytope.

    Vertex form: hull of a2 vi - b2 vj, a2 vi - (a2-a1) vj and
    (b2-b1) vi - b2 vj over all i, j; for d = 1 the segment
    [-b1 v1, a1 v1].
    """
    a1, a2, b1, b2 = frac(a1), frac(a2), frac(b1), frac(b2)
    if checked:
        _check_difference_params(a1, a2, b1, b2)
    verts = list(T.vertices)
    o = zero_vec(T.n)
    if o not in verts:
        raise OriginConditionViolatedError("simplex must have the origin as a vertex")
    vs = [v for v in verts if v != o]
    d = len(vs)
    if d != T.dim:
        raise ValueError("body is not a simplex with apex at the origin")
    if d == 0:
        return Polytope(T.n, [o])
    if d == 1:
        v1 = vs[0]
        return Polytope(T.n, [vscale(-b1, v1), vscale(a1, v1)])
    pts = []
    for vi in vs:
        for vj in vs:
            pts.append(vsub(vscale(a2, vi), vscale(b2, vj)))
            pts.append(vsub(vscale(a2, vi), vscale(a2 - a1, vj)))
            pts.append(vsub(vscale(b2 - b1, vi), vscale(b2, vj)))
    return Polytope(T.n, pts)


# ---------------------------------------------------------------------------
# radial function


def radial_function(P, x):
    """Largest lambda with lambda x in P, exact.

    Raises RayOutsideBodyError when the ray immediately leaves the body
    (the zero-radius case) or misses its affine span.
    """
    x = vec(x)
    if is_zero_vec(x):
        raise ValueError("direction must be nonzero")
    if P.dim == P.n:
        lam = None
        for f in P.facets:
            s = dot(x, f.normal)
            if s > 0:
                c = f.offset / s
                if lam is None or c < lam:
                    lam = c
        if lam is None:
            raise GeometryError("direction never exits the body")
        if lam == 0:
            raise RayOutsideBodyError("ray exits the body at the origin")
        return lam
    if P.dim == 0 or not in_span(x, P):
        raise RayOutsideBodyError("ray leaves the linear span of the body")
    basis = span_basis(P)
    gram = [[dot(u, w) for w in basis] for u in basis]

    def coords(v):
        return solve_linear(gram, [dot(v, w) for w in basis])

    Q = Polytope(P.dim, [coords(v) for v in P.vertices], pruned=True)
    return radial_function(Q, coords(x))


# ---------------------------------------------------------------------------
# classified operator families


FAMILIES = (
    "l1_contravariant",
    "lp_contravariant",
    "linf_contravariant_pair",
    "hull_weighted",
    "lp_covariant",
    "covariant_l1_3d",
)


@dataclass(frozen=True)
class ValuationParams:
    """Coefficient bundle for a classified family.

    c: scalar weights (meaning depends on the family), a/b: ordered
    weight vectors (per-dimension for the hull family, pairs for the
    difference family).
    """

    p: object = 1
    c: tuple = ()
    a: tuple = ()
    b: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "p", normalize_p(self.p))
        object.__setattr__(self, "c", tuple(frac(v) for v in self.c))
        object.__setattr__(self, "a", tuple(frac(v) for v in self.a))
        object.__setattr__(self, "b", tuple(frac(v) for v in self.b))

    def to_json(self, family=None, mode="exact"):
        out = {
            "p": "inf" if self.p == INF else str(Fraction(self.p)),
            "coefficients": {
                "c": [str(v) for v in self.c],
                "a": [str(v) for v in self.a],
                "b": [str(v) for v in self.b],
            },
            "mode": mode,
        }
        if family is not None:
            out["family"] = family
        return out

    @classmethod
    def from_json(cls, obj):
        co = obj.get("coefficients", {})
        p = obj.get("p", 1)
        if p == "inf":
            p = INF
        return cls(p=p if not isinstance(p, str) else frac(p),
                   c=tuple(co.get("c", ())),
                   a=tuple(co.get("a", ())),
                   b=tuple(co.get("b", ())))


def validate_params(family, params, n):
    """Family constraint check; raises on violation."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family: {family}")
    p, c, a, b = params.p, params.c, params.a, params.b
    if family == "l1_contravariant":
        if n < 3:
            raise FamilyDimensionMismatchError("family needs n >= 3")
        if len(c) != 3:
            raise ConstraintViolationError("need three weights")
        if c[0] < 0 or c[0] + c[1] + c[2] < 0:
            raise ConstraintViolationError("weights outside the admissible cone")
    elif family == "lp_contravariant":
        if n < 3:
            raise FamilyDimensionMismatchError("family needs n >= 3")
        if p == INF or p <= 1:
            raise ConstraintViolationError("family needs 1 < p < inf")
        if len(c) != 2 or min(c) < 0:
            raise ConstraintViolationError("need two nonnegative weights")
    elif family == "linf_contravariant_pair":
        if n < 3:
            raise FamilyDimensionMismatchError("family needs n >= 3")
        if len(c) != 2 or min(c) < 0:
            raise ConstraintViolationError("need two nonnegative weights")
    elif family == "hull_weighted":
        if n < 3:
            raise FamilyDimensionMismatchError("family needs n >= 3")
        if len(a) != n or len(b) != n:
            raise ConstraintViolationError("need weight vectors of length n")
        if a[0] < 0 or b[0] < 0:
            raise ConstraintViolationError("weights must be nonnegative")
        if any(a[i] > a[i + 1] for i in range(n - 1)) or \
           any(b[i] > b[i + 1] for i in range(n - 1)):
            raise ConstraintViolationError("weight vectors must be nondecreasing")
    elif family == "lp_covariant":
        if p == INF:
            raise ConstraintViolationError("family needs finite p")
        if p == 1 and n < 4:
            raise FamilyDimensionMismatchError("p = 1 needs n >= 4")
        if p > 1 and n < 3:
            raise FamilyDimensionMismatchError("family needs n >= 3")
        if len(c) != 4 or min(c) < 0:
            raise ConstraintViolationError("need four nonnegative weights")
    elif family == "covariant_l1_3d":
        if n != 3:
            raise FamilyDimensionMismatchError("family is specific to n = 3")
        if len(c) != 2 or min(c) < 0:
            raise ConstraintViolationError("need two nonnegative weights")
        if len(a) != 2 or len(b) != 2:
            raise ConstraintViolationError("need weight pairs a and b")
        if min(a) < 0 or min(b) < 0:
            raise ConstraintViolationError("weights must be nonnegative")
        _check_difference_params(a[0], a[1], b[0], b[1])


def classified_operator(family, params, mode="exact"):
    """Operator of a classified family as a map polytope -> field or body.

    mode "unchecked" skips the constraint validation so deliberately
    invalid weights can be probed for identity failures; the point body
    always maps to the zero field / {o}.
    """
    if not isinstance(params, ValuationParams):
        params = ValuationParams(**params)
    checked = mode != "unchecked"

    def op(P):
        if checked:
            validate_params(family, params, P.n)
        n = P.n
        if family == "l1_contravariant":
            c1, c2, c3 = params.c
            terms = [(c1, projection_body(P)),
                     (c2, origin_projection_body(P)),
                     (c3, origin_projection_body(P.reflect()))]
            return field_sum(terms, 1, n, kind="facet-sum",
                             body_degree=n - 1, label=f"{family}")
        if family == "lp_contravariant":
            h1 = lp_projection_body(P, params.p, 1)
            h2 = lp_projection_body(P, params.p, -1)
            return lp_combine(h1, h2, params.p, params.c[0], params.c[1])
        if family == "linf_contravariant_pair":
            c1, c2 = params.c
            A = linf_projection_body(P, 1)
            B = linf_projection_body(P, -1)
            pts = [zero_vec(n)]
            if c1 > 0:
                pts += [vscale(c1, v) for v in A.vertices]
            if c2 > 0:
                pts += [vscale(c2, v) for v in B.vertices]
            return Polytope(n, pts)
        if family == "hull_weighted":
            d = P.dim
            if d == 0:
                return Polytope(n, [zero_vec(n)])
            ad = params.a[d - 1]
            bd = params.b[d - 1]
            pts = [zero_vec(n)]
            if ad > 0:
                pts += [vscale(ad, v) for v in P.vertices]
            if bd > 0:
                pts += [vscale(-bd, v) for v in P.vertices]
            return Polytope(n, pts)
        if family == "lp_covariant":
            p = params.p
            c1, c2, c3, c4 = params.c
            q = as_int(p)
            w = [v ** q if q is not None else float(v) ** float(p) for v in params.c]
            terms = []
            if w[0]:
                terms.append((w[0], moment_body(P, p, 1)))
            if w[1]:
                terms.append((w[1], moment_body(P, p, -1)))
            if w[2]:
                terms.append((w[2], from_polytope(P, p)))
            if w[3]:
                terms.append((w[3], from_polytope(P.reflect(), p)))
            if not terms:
                return constant_zero(n, p, label=family)
            return field_sum(terms, p, n, kind="affine-combination",
                             body_degree=None, label=family)
        if family == "covariant_l1_3d":
            c1, c2 = params.c
            a1, a2 = params.a
            b1, b2 = params.b
            terms = [(1, difference_body(P, a1, a2, b1, b2, checked=checked))]
            if c1:
                terms.append((c1, moment_body(P, 1, 1)))
            if c2:
                terms.append((c2, moment_body(P, 1, -1)))
            return field_sum(terms, 1, n, kind="affine-combination",
                             body_degree=None, label=family)
        raise ValueError(f"unknown family: {family}")

    return op
