"""Verification harness: instance generation and identity suites.

Generates simplex splits with predicted transform images, origin-vertex
simplex union chains, and batteries of special linear maps, then runs
the valuation-identity, equivariance, homogeneity, agreement and
counterexample suites, producing machine-readable verdicts.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from .geometry import (
    GeometryError,
    LinearMap,
    Polytope,
    frac,
    halfspace_split,
    hat_simplex,
    project_onto_body,
    standard_simplex,
    transform_phi,
    unit_vec,
    vscale,
    zero_vec,
)
from .supports import (
    INF,
    SupportEval,
    from_polytope,
    probe_directions,
    subadditivity_check,
)
from .operators import (
    ValuationParams,
    classified_operator,
    difference_body,
    difference_body_simplex,
    face_sum_closed_form,
    face_sum_valuation,
    linf_moment_body,
    linf_projection_body,
    lp_projection_body,
    moment_body,
    origin_projection_body,
    polar_body,
    projection_body,
    radial_function,
)


class NotSpecialLinearError(ValueError):
    pass


class GenerationFailedError(RuntimeError):
    pass


class DomainViolationError(ValueError):
    pass


DEFAULT_LAMBDAS = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
                   Fraction(2, 3), Fraction(3, 4))
DEFAULT_SCALES = (Fraction(1, 2), Fraction(1), Fraction(2))


@dataclass(frozen=True)
class SuiteConfig:
    """Settings for a full harness run; equal configs replay identically."""

    families: tuple = ("all",)
    dims: tuple = (3, 4)
    lambdas: tuple = DEFAULT_LAMBDAS
    scales: tuple = DEFAULT_SCALES
    probes: int = 500
    seed: int = 20260823
    depth: int = 2
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12

    def to_json(self):
        return {
            "families": list(self.families),
            "dims": list(self.dims),
            "lambdas": [str(v) for v in self.lambdas],
            "scales": [str(v) for v in self.scales],
            "probes": self.probes,
            "seed": self.seed,
            "depth": self.depth,
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
        }

    @classmethod
    def from_json(cls, obj):
        kw = {}
        if "families" in obj:
            kw["families"] = tuple(obj["families"])
        if "dims" in obj:
            kw["dims"] = tuple(int(d) for d in obj["dims"])
        if "lambdas" in obj:
            kw["lambdas"] = tuple(frac(v) for v in obj["lambdas"])
        if "scales" in obj:
            kw["scales"] = tuple(frac(v) for v in obj["scales"])
        for key in ("probes", "seed", "depth"):
            if key in obj:
                kw[key] = int(obj[key])
        for key in ("rel_tol", "abs_tol"):
            if key in obj:
                kw[key] = float(obj[key])
        return cls(**kw)


@dataclass
class Verdict:
    """Outcome of one suite: per-case results plus failure witnesses."""

    name: str
    passed: bool
    cases: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    expected_pass: bool = True
    details: dict = field(default_factory=dict)

    @property
    def as_expected(self):
        return self.passed == self.expected_pass

    def to_json(self):
        return {
            "suite": self.name,
            "pass": self.passed,
            "expected_pass": self.expected_pass,
            "as_expected": self.as_expected,
            "cases": self.cases,
            "failures": self.failures[:20],
            "seconds": round(self.seconds, 3),
            "details": self.details,
        }


# ---------------------------------------------------------------------------
# instance generation


@dataclass(frozen=True)
class SplitInstance:
    """One hyperplane split of a scaled standard simplex.

    predicted maps piece names to the transform images the split must
    equal: shear images of the simplex and of its companion simplex.
    """

    case: SplitCase
    predicted: dict
    n: int
    d: int
    lam: Fraction
    s: Fraction


def generate_simplex_splits(n, d, lambdas=DEFAULT_LAMBDAS, scales=DEFAULT_SCALES):
    """Splits of s T^d by the origin hyperplane mixing e1 and e2.

    Carries predicted images: for d < n the two exact special linear
    shears move T^d onto the pieces; for d = n the non-normalized shear
    pair does (their unit-determinant versions differ by an irrational
    dilation, kept out of the exact path).
    """
    if not 2 <= d <= n:
        raise ValueError("need 2 <= d <= n")
    out = []
    for s in scales:
        s = frac(s)
        T = standard_simplex(d, n, s)
        Th = hat_simplex(d, n, s)
        for lam in lambdas:
            lam = frac(lam)
            normal = (1 - lam, -lam) + (Fraction(0),) * (n - 2)
            if d <= n - 1:
                m_lo = transform_phi(1, lam, n)
                m_hi = transform_phi(2, lam, n)
            else:
                m_lo = transform_phi(3, lam, n, mode="shear")
                m_hi = transform_phi(4, lam, n, mode="shear")
            case = halfspace_split(T, normal)
            predicted = {
                "lower": T.map(m_lo),
                "upper": T.map(m_hi),
                "section": Th.map(m_lo),
            }
            out.append(SplitInstance(case=case, predicted=predicted,
                                     n=n, d=d, lam=lam, s=s))
    return out


@dataclass(frozen=True)
class UnionQuad:
    """A quadruple (K, L, union, intersection) valid for the valuation law."""

    K: Polytope
    L: Polytope
    union: Polytope
    inter: Polytope
    note: str = ""


def _split_origin_simplex(T, i, j, mu):
    """Split [o, v1..vd] through the plane spanned by o, the other
    vertices, and the point mu vi + (1-mu) vj; returns two origin-vertex
    simplices and their shared facet simplex."""
    o = zero_vec(T.n)
    vs = [v for v in T.vertices if v != o]
    mid = tuple(mu * a + (1 - mu) * b for a, b in zip(vs[i], vs[j]))
    rest = [v for k, v in enumerate(vs) if k not in (i, j)]
    A = Polytope(T.n, [o, vs[i], mid] + rest, pruned=True)
    B = Polytope(T.n, [o, mid, vs[j]] + rest, pruned=True)
    shared = Polytope(T.n, [o, mid] + rest, pruned=True)
    return A, B, shared


def generate_union_chain(n, depth=2, seed=20260823, count=6, max_tries=200):
    """Union quadruples over origin-vertex simplices, nested up to depth.

    Each quadruple is a simplex split into two origin-vertex simplices
    sharing a facet; deeper levels re-split a piece.  All portions keep
    the origin as a vertex, so every body stays in the valuation domain.
    """
    if depth < 1 or depth > 3:
        raise GenerationFailedError("depth must be between 1 and 3")
    rng = random.Random(seed)
    quads = []
    tries = 0
    while len(quads) < count:
        tries += 1
        if tries > max_tries:
            raise GenerationFailedError(f"no valid chain after {max_tries} tries")
        d = rng.choice(range(2, n + 1))
        vs = []
        for _ in range(d):
            vs.append(tuple(Fraction(rng.randint(-3, 3)) for _ in range(n)))
        T = Polytope(n, [zero_vec(n)] + vs)
        if T.dim != d or len(T.vertices) != d + 1 or zero_vec(n) not in T.vertices:
            continue
        level = T
        for _ in range(depth):
            verts = [v for v in level.vertices if v != zero_vec(n)]
            if len(verts) < 2:
                break
            i, j = rng.sample(range(len(verts)), 2)
            mu = rng.choice(DEFAULT_LAMBDAS)
            A, B, shared = _split_origin_simplex(level, i, j, mu)
            union = Polytope(n, list(A.vertices) + list(B.vertices))
            if union != level:
                raise GenerationFailedError("split pieces fail to reassemble")
            quads.append(UnionQuad(K=A, L=B, union=level, inter=shared,
                                   note=f"d={d}"))
            level = rng.choice((A, B))
            if len(quads) >= count:
                break
    return quads


def integer_unimodular_maps(n, count=10, seed=20260823, shears=4):
    """Determinant-one integer maps built from elementary shears."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        M = LinearMap.identity(n)
        for _ in range(shears):
            i, j = rng.sample(range(n), 2)
            k = rng.choice((-2, -1, 1, 2))
            rows = [list(unit_vec(n, r)) for r in range(n)]
            rows[i][j] = Fraction(k)
            M = LinearMap(rows) @ M
        out.append(M)
    return out


# ---------------------------------------------------------------------------
# identity checks


def as_field(obj, p):
    """Uniform p-field view of an operator output (polytope or field)."""
    if isinstance(obj, Polytope):
        return from_polytope(obj, p)
    if isinstance(obj, SupportEval):
        if obj.p != p:
            raise DomainViolationError("field exponent mismatch")
        return obj
    raise DomainViolationError(f"not an operator output: {type(obj)!r}")


def _close(a, b, rel, abs_floor):
    fa, fb = float(a), float(b)
    return abs(fa - fb) <= max(abs_floor, rel * max(abs(fa), abs(fb)))


def check_valuation_identity(op, p, quad, probes, rel_tol=1e-9, abs_tol=1e-12,
                             name="valuation", values=None):
    """Pointwise h^p additivity (max identity at p = inf) over a quadruple.

    quad is (K, L, union, intersection); values, when given, is a cache
    dict mapping body id to the probe-value list so shared bodies are
    evaluated once.
    """
    K, L, U, I = quad
    start = time.perf_counter()

    def get(B):
        key = id(B)
        if values is not None and key in values:
            return values[key]
        try:
            h = as_field(op(B), p)
        except (GeometryError, ValueError) as e:
            raise DomainViolationError(f"operator rejected a body: {e}") from None
        vals = [h.value(x) for x in probes]
        if values is not None:
            values[key] = vals
        return vals

    vK, vL, vU, vI = get(K), get(L), get(U), get(I)
    failures = []
    exact_all = True
    for idx, x in enumerate(probes):
        if p == INF:
            lhs = max(vU[idx], vI[idx])
            rhs = max(vK[idx], vL[idx])
        else:
            lhs = vU[idx] + vI[idx]
            rhs = vK[idx] + vL[idx]
        if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
            ok = lhs == rhs
        else:
            exact_all = False
            ok = _close(lhs, rhs, rel_tol, abs_tol)
        if not ok:
            failures.append({
                "probe": [str(c) for c in x],
                "lhs": float(lhs),
                "rhs": float(rhs),
            })
    return Verdict(name=name, passed=not failures, cases=len(probes),
                   failures=failures, seconds=time.perf_counter() - start,
                   details={"exact": exact_all})


def check_equivariance(op, kind, transforms, bodies, probes,
                       rel_tol=1e-9, abs_tol=1e-12, name="equivariance"):
    """h_{Z(phi P)}(x) against h_{Z P}(phi^t x) or h_{Z P}(phi^{-1} x).

    kind is "covariant" or "contravariant"; transforms must be special
    linear (checked exactly).
    """
    if kind not in ("covariant", "contravariant"):
        raise ValueError("kind must be covariant or contravariant")
    start = time.perf_counter()
    failures = []
    cases = 0
    for M in transforms:
        if not M.is_sl:
            raise NotSpecialLinearError(f"determinant {M.det} != 1")
        back = M.transpose() if kind == "covariant" else M.inverse()
        for P in bodies:
            base = op(P)
            moved = op(P.map(M))
            hb = base if isinstance(base, SupportEval) else from_polytope(base, 1)
            hm = moved if isinstance(moved, SupportEval) else from_polytope(moved, 1)
            for x in probes:
                cases += 1
                a = hm.value(x)
                b = hb.value(back(x))
                if isinstance(a, Fraction) and isinstance(b, Fraction):
                    ok = a == b
                else:
                    ok = _close(a, b, rel_tol, abs_tol)
                if not ok:
                    failures.append({"probe": [str(c) for c in x],
                                     "moved": float(a), "base": float(b)})
    return Verdict(name=name, passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def sublinearity_counterexample():
    """The face-lattice sum that is a valuation but not a support function.

    On the 4-simplex with the origin inside an edge, weights (0,1) plus
    reflected weights (0,0) give probe values 4, 4 and 9: subadditivity
    fails by exactly the weight gap.  The 3-dimensional analogue built
    with admissible difference-body weights passes the same probes.
    """
    start = time.perf_counter()
    cases = []
    P = Polytope(4, [(-1, 0, 0, 0), (1, 0, 0, 0),
                     (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    h = face_sum_valuation(P, 1, 0, 1)
    hr = face_sum_valuation(P.reflect(), 1, 0, 0)

    def total(x):
        return h.value(x) + hr.value(x)

    x, y = (1, 3, 3, 2), (1, 3, 2, 3)
    xy = tuple(a + b for a, b in zip(x, y))
    vals = (total(x), total(y), total(xy))
    cases.append({"case": "probe values", "pass": vals == (4, 4, 9),
                  "got": [str(v) for v in vals]})
    margin = vals[2] - vals[0] - vals[1]
    cases.append({"case": "violation margin", "pass": margin == 1,
                  "got": str(margin)})
    field4 = SupportEval(n=4, p=1, fn=total, kind="face-lattice-sum",
                         exact=True, label="counterexample-4d")
    rep = subadditivity_check(field4, samples=40)
    cases.append({"case": "4d subadditivity fails", "pass": not rep.passed,
                  "witness": rep.to_json().get("witness")})
    Q = Polytope(3, [(-1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    h3 = difference_body(Q, 0, 1, 1, 1)
    rep3 = subadditivity_check(h3, samples=40)
    cases.append({"case": "3d analogue subadditive", "pass": rep3.passed})
    ok = all(c["pass"] for c in cases)
    return Verdict(name="sublinearity_counterexample", passed=ok,
                   cases=len(cases), failures=[c for c in cases if not c["pass"]],
                   seconds=time.perf_counter() - start,
                   details={"values": [str(v) for v in vals],
                            "margin": str(margin)})


# ---------------------------------------------------------------------------
# operator battery and the full suite


def operator_battery(n, families=("all",)):
    """(name, exponent, operator) triples for the identity suite."""
    want = set(families)

    def on(*keys):
        return "all" in want or any(k in want for k in keys)

    ops = []
    if on("projection"):
        ops.append(("projection", 1, projection_body))
        ops.append(("origin_projection", 1, origin_projection_body))
    if on("lp_projection"):
        for p in (1, 2, 3):
            for sg, tag in ((1, "+"), (-1, "-")):
                ops.append((f"lp_projection[p={p}]{tag}", p,
                            partial(lp_projection_body, p=p, sign=sg)))
    if on("linf_projection"):
        for sg, tag in ((1, "+"), (-1, "-")):
            ops.append((f"linf_projection{tag}", INF,
                        partial(linf_projection_body, sign=sg)))
    if on("moment"):
        for p in (1, 2, 3):
            for sg, tag in ((1, "+"), (-1, "-")):
                ops.append((f"moment[p={p}]{tag}", p,
                            partial(moment_body, p=p, sign=sg)))
    if on("linf_moment"):
        for sg, tag in ((1, "+"), (-1, "-")):
            ops.append((f"linf_moment{tag}", INF,
                        partial(linf_moment_body, sign=sg)))
    if on("face_sum"):
        for p in (1, 2, 3):
            ops.append((f"face_sum[p={p}]", p,
                        lambda P, _p=p: face_sum_valuation(P, _p, 1, 3)))
    if on("hull_weighted"):
        a = tuple(range(1, n + 1))
        b = tuple((i + 2) // 2 for i in range(n))
        ops.append(("hull_weighted", INF, classified_operator(
            "hull_weighted", ValuationParams(p=INF, a=a, b=b))))
    if on("linf_contravariant_pair"):
        ops.append(("linf_contravariant_pair", INF, classified_operator(
            "linf_contravariant_pair", ValuationParams(p=INF, c=(1, 2)))))
    if on("lp_contravariant"):
        ops.append(("lp_contravariant[p=2]", 2, classified_operator(
            "lp_contravariant", ValuationParams(p=2, c=(1, 2)))))
    if on("lp_covariant"):
        ops.append(("lp_covariant[p=2]", 2, classified_operator(
            "lp_covariant", ValuationParams(p=2, c=(1, 2, 1, 3)))))
        if n >= 4:
            ops.append(("lp_covariant[p=1]", 1, classified_operator(
                "lp_covariant", ValuationParams(p=1, c=(1, 2, 1, 3)))))
    if on("l1_contravariant"):
        ops.append(("l1_contravariant", 1, classified_operator(
            "l1_contravariant", ValuationParams(p=1, c=(2, 1, -1)))))
    if on("covariant_l1_3d") and n == 3:
        ops.append(("covariant_l1_3d", 1, classified_operator(
            "covariant_l1_3d", ValuationParams(p=1, c=(1, 2), a=(1, 2), b=(1, 2)))))
    return ops


def _suite_split_predictions(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    for n in config.dims:
        for d in range(2, n + 1):
            for inst in generate_simplex_splits(n, d, config.lambdas, config.scales):
                cases += 1
                sc = inst.case
                ok = (sc.lower == inst.predicted["lower"]
                      and sc.upper == inst.predicted["upper"]
                      and sc.section == inst.predicted["section"]
                      and not sc.degenerate)
                if not ok:
                    failures.append({"n": n, "d": d, "lam": str(inst.lam),
                                     "s": str(inst.s)})
    return Verdict(name="split_predictions", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _suite_valuation(config):
    start = time.perf_counter()
    verdicts = []
    for n in config.dims:
        probes = probe_directions(n, config.probes, config.seed)
        quads = []
        for d in range(2, n + 1):
            for inst in generate_simplex_splits(n, d, config.lambdas, config.scales):
                sc = inst.case
                quads.append((sc.lower, sc.upper, sc.parent, sc.section))
        for uq in generate_union_chain(n, depth=config.depth, seed=config.seed):
            quads.append((uq.K, uq.L, uq.union, uq.inter))
        for name, p, op in operator_battery(n, config.families):
            cache = {}
            bad = []
            total = 0
            for quad in quads:
                v = check_valuation_identity(op, p, quad, probes,
                                             config.rel_tol, config.abs_tol,
                                             name=name, values=cache)
                total += v.cases
                if not v.passed:
                    bad.extend(v.failures[:3])
            verdicts.append(Verdict(name=f"valuation[{name},n={n}]",
                                    passed=not bad, cases=total, failures=bad,
                                    seconds=0.0))
    out = Verdict(name="valuation_identity",
                  passed=all(v.passed for v in verdicts),
                  cases=sum(v.cases for v in verdicts),
                  failures=[f for v in verdicts if not v.passed
                            for f in [{"suite": v.name, "witnesses": v.failures}]],
                  seconds=time.perf_counter() - start,
                  details={"sub": [v.name for v in verdicts if not v.passed]})
    return out


def _suite_equivariance(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    for n in config.dims:
        probes = probe_directions(n, min(60, config.probes), config.seed)
        maps = integer_unimodular_maps(n, count=10, seed=config.seed)
        maps += [transform_phi(1, lam, n) for lam in (Fraction(1, 4), Fraction(1, 2))]
        maps += [transform_phi(2, lam, n) for lam in (Fraction(1, 4), Fraction(1, 2))]
        bodies = [standard_simplex(n, n),
                  standard_simplex(n, n, Fraction(1, 2)).map(
                      integer_unimodular_maps(n, 1, config.seed + 1)[0])]
        battery = [
            ("projection", "contravariant", projection_body),
            ("origin_projection", "contravariant", origin_projection_body),
            ("lp_projection[p=2]+", "contravariant",
             partial(lp_projection_body, p=2, sign=1)),
            ("linf_projection+", "contravariant",
             partial(linf_projection_body, sign=1)),
            ("moment[p=1]+", "covariant", partial(moment_body, p=1, sign=1)),
            ("moment[p=2]-", "covariant", partial(moment_body, p=2, sign=-1)),
            ("linf_moment+", "covariant", partial(linf_moment_body, sign=1)),
            ("face_sum[p=1]", "covariant",
             lambda P: face_sum_valuation(P, 1, 1, 3)),
        ]
        for name, kind, op in battery:
            v = check_equivariance(op, kind, maps, bodies, probes,
                                   config.rel_tol, config.abs_tol, name=name)
            cases += v.cases
            if not v.passed:
                failures.append({"op": name, "n": n,
                                 "witnesses": v.failures[:3]})
    return Verdict(name="equivariance", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _suite_homogeneity(config):
    from .supports import homogeneity_check
    start = time.perf_counter()
    failures = []
    cases = 0
    for n in config.dims:
        bodies = [standard_simplex(n, n)]
        checks = [
            ("projection", projection_body, n - 1),
            ("moment[p=1]+", partial(moment_body, p=1, sign=1), Fraction(n + 1, 1)),
            ("moment[p=2]+", partial(moment_body, p=2, sign=1), Fraction(n, 2) + 1),
            ("lp_projection[p=1]+", partial(lp_projection_body, p=1, sign=1), n - 1),
            ("lp_projection[p=2]+", partial(lp_projection_body, p=2, sign=1),
             Fraction(n, 2) - 1),
            ("linf_projection+",
             lambda P: from_polytope(linf_projection_body(P, 1), INF), -1),
            ("face_sum[p=2]", lambda P: face_sum_valuation(P, 2, 1, 3), 1),
        ]
        for name, op, q in checks:
            cases += 1
            if not homogeneity_check(op, q, bodies, tol=1e-10, seed=config.seed):
                failures.append({"op": name, "n": n, "q": str(q)})
    return Verdict(name="homogeneity", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _suite_lower_dim(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    for n in config.dims:
        flat = [standard_simplex(d, n) for d in range(1, n)]
        probes = probe_directions(n, 40, config.seed)
        for P in flat:
            for name, h in (("lp_projection[p=1]+", lp_projection_body(P, 1, 1)),
                            ("lp_projection[p=2]-", lp_projection_body(P, 2, -1)),
                            ("moment[p=1]+", moment_body(P, 1, 1)),
                            ("moment[p=3]-", moment_body(P, 3, -1))):
                cases += 1
                if any(h.value(x) != 0 for x in probes):
                    failures.append({"op": name, "n": n, "d": P.dim})
            for name, B in (("linf_projection+", linf_projection_body(P, 1)),
                            ("linf_moment+", linf_moment_body(P, 1))):
                cases += 1
                if B.vertices != (zero_vec(n),):
                    failures.append({"op": name, "n": n, "d": P.dim})
    return Verdict(name="lower_dim_vanishing", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _suite_projection_property(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    for n in config.dims:
        probes = probe_directions(n, 40, config.seed)
        for d in range(1, n):
            P = standard_simplex(d, n)
            covariant = [
                ("face_sum[p=1]", face_sum_valuation(P, 1, 1, 3)),
                ("hull_weighted", from_polytope(classified_operator(
                    "hull_weighted", ValuationParams(
                        p=INF, a=tuple(range(1, n + 1)),
                        b=tuple((i + 2) // 2 for i in range(n))))(P), 1)),
            ]
            for name, h in covariant:
                for x in probes:
                    cases += 1
                    xp = project_onto_body(x, P)
                    if h.value(x) != h.value(xp):
                        failures.append({"op": name, "n": n, "d": d,
                                         "probe": [str(c) for c in x]})
    return Verdict(name="projection_property", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _suite_polar(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    for n in config.dims:
        cube = Polytope(n, [tuple(Fraction(e) for e in pt)
                            for pt in _box_corners(n)])
        simplex = Polytope(n, [vscale(Fraction(-1), sum_vec(n))]
                           + [vscale(Fraction(2), unit_vec(n, i)) for i in range(n)])
        probes = probe_directions(n, 100, config.seed)
        for K in (cube, simplex):
            cases += 1
            A = linf_projection_body(K, 1)
            B = polar_body(K)
            if A != B:
                failures.append({"n": n, "case": "vertex sets differ"})
                continue
            h = from_polytope(A, INF)
            for x in probes:
                cases += 1
                if h.value(x) * radial_function(K, x) != 1:
                    failures.append({"n": n, "probe": [str(c) for c in x]})
                    break
    return Verdict(name="polar_consistency", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _box_corners(n):
    return list(itertools.product((-1, 1), repeat=n))


def sum_vec(n):
    return tuple(Fraction(1) for _ in range(n))


def _suite_closed_form(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    rng = random.Random(config.seed)
    for n in config.dims:
        for d in range(1, n + 1):
            T = standard_simplex(d, n)
            E = Polytope(n, [vscale(Fraction(-1), unit_vec(n, 0))]
                         + [unit_vec(n, i) for i in range(d)])
            for p in (1, 2, 3):
                hT = face_sum_valuation(T, p, 2, 5)
                hTb = face_sum_valuation(T.reflect(), p, 1, 4)
                hE = face_sum_valuation(E, p, 2, 5)
                hEb = face_sum_valuation(E.reflect(), p, 1, 4)
                for _ in range(60):
                    x = tuple(rng.randint(-6, 6) for _ in range(n))
                    cases += 2
                    ca, cb = face_sum_closed_form(zero_vec(n), d, 0, x, p, 2, 5, 1, 4)
                    if (hT.value(x), hTb.value(x)) != (ca, cb):
                        failures.append({"body": f"T^{d}", "n": n, "p": p,
                                         "x": list(x)})
                    ca, cb = face_sum_closed_form(
                        vscale(Fraction(-1), unit_vec(n, 0)), d, 1, x, p, 2, 5, 1, 4)
                    if (hE.value(x), hEb.value(x)) != (ca, cb):
                        failures.append({"body": f"edge-simplex d={d}", "n": n,
                                         "p": p, "x": list(x)})
    return Verdict(name="closed_form_agreement", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _suite_difference(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    rng = random.Random(config.seed)
    tuples = [(0, 1, 1, 2), (1, 1, 1, 1), (1, 3, 2, 4), (0, 2, 2, 2),
              (Fraction(1, 2), 1, Fraction(3, 4), Fraction(3, 2))]
    nmax = max(config.dims)
    for d in range(1, nmax + 1):
        T = standard_simplex(d, nmax)
        for a1, a2, b1, b2 in tuples:
            D = difference_body_simplex(T, a1, a2, b1, b2)
            hT = face_sum_valuation(T, 1, a1, a2)
            hTb = face_sum_valuation(T.reflect(), 1, b1, b2)
            for _ in range(60):
                x = tuple(rng.randint(-5, 5) for _ in range(nmax))
                cases += 1
                if D.support(x) != hT.value(x) + hTb.value(x):
                    failures.append({"d": d, "weights": [str(v) for v in
                                                         (a1, a2, b1, b2)],
                                     "x": list(x)})
    return Verdict(name="difference_vertex_vs_field", passed=not failures,
                   cases=cases, failures=failures,
                   seconds=time.perf_counter() - start)


def _suite_lp_to_linf(config):
    start = time.perf_counter()
    failures = []
    cases = 0
    for n in config.dims:
        T = standard_simplex(n, n)
        hinf = from_polytope(linf_projection_body(T, 1), INF)
        probes = [x for x in probe_directions(n, 60, config.seed)
                  if hinf.value(x) > 0]
        ladder = [1, 2, 4, 8, 16, 32, 64]
        for x in probes:
            cases += 1
            prev_err = None
            limit = float(hinf.value(x))
            good = True
            fv = None
            for p in ladder:
                fv = float(lp_projection_body(T, p, 1).support(x))
                err = abs(fv - limit)
                if prev_err is not None and err > prev_err + 1e-6:
                    good = False
                prev_err = err
            if not good or abs(fv - limit) > 0.05 * max(limit, 1e-12):
                failures.append({"n": n, "probe": [str(c) for c in x],
                                 "final": fv, "limit": limit})
    return Verdict(name="lp_to_linf_limit", passed=not failures, cases=cases,
                   failures=failures, seconds=time.perf_counter() - start)


def _suite_negative_hull(config):
    """Non-monotone weight vector must break the max-form identity."""
    start = time.perf_counter()
    a_bad = (1, 3, 2, 4)
    found = None
    n = 4
    if n not in config.dims:
        n = max(config.dims)
        a_bad = a_bad[:n]
    op = classified_operator("hull_weighted",
                             ValuationParams(p=INF, a=a_bad, b=(0,) * n),
                             mode="unchecked")
    probes = probe_directions(n, min(200, config.probes), config.seed)
    for d in range(2, n + 1):
        for inst in generate_simplex_splits(n, d, config.lambdas[:2],
                                            config.scales[:1]):
            sc = inst.case
            quad = (sc.lower, sc.upper, sc.parent, sc.section)
            v = check_valuation_identity(op, INF, quad, probes)
            if not v.passed:
                found = {"n": n, "d": d, "lam": str(inst.lam),
                         "witness": v.failures[0]}
                break
        if found:
            break
    return Verdict(name="negative_non_monotone_hull", passed=found is not None,
                   cases=1, failures=[] if found else
                   [{"case": "no witness found"}],
                   seconds=time.perf_counter() - start,
                   details={"witness": found} if found else {})


def _suite_constraint_boundary(config):
    """Difference-body constraints are sharp at the boundary."""
    start = time.perf_counter()
    cases = []
    Q = Polytope(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    h_edge = difference_body(Q, 0, 1, 0, 1)     # a2 - a1 = b2 exactly
    rep = subadditivity_check(h_edge, samples=40)
    cases.append({"case": "boundary a2-a1 = b2 subadditive",
                  "pass": rep.passed})
    eps = Fraction(1, 10)
    h_bad = difference_body(Q, 0, 1 + eps, 0, 1, checked=False)
    rep2 = subadditivity_check(h_bad, samples=40)
    cases.append({"case": "a2-a1 = b2 + 1/10 violates",
                  "pass": not rep2.passed,
                  "witness": rep2.to_json().get("witness")})
    ok = all(c["pass"] for c in cases)
    return Verdict(name="constraint_boundary", passed=ok, cases=len(cases),
                   failures=[c for c in cases if not c["pass"]],
                   seconds=time.perf_counter() - start)


def run_suite(config=None):
    """Full verification battery; returns {suite name: Verdict}."""
    if config is None:
        config = SuiteConfig()
    if not config.families:
        return {}
    suites = [
        _suite_split_predictions,
        _suite_valuation,
        _suite_equivariance,
        _suite_homogeneity,
        _suite_lower_dim,
        _suite_projection_property,
        _suite_polar,
        _suite_closed_form,
        _suite_difference,
        _suite_lp_to_linf,
        lambda cfg: sublinearity_counterexample(),
        _suite_negative_hull,
        _suite_constraint_boundary,
    ]
    bundle = {}
    for fn in suites:
        v = fn(config)
        bundle[v.name] = v
    return bundle


def bundle_ok(bundle):
    return all(v.as_expected for v in bundle.values())


def bundle_to_json(bundle, config=None):
    out = {
        "ok": bundle_ok(bundle),
        "suites": [v.to_json() for v in bundle.values()],
    }
    if config is not None:
        out["config"] = config.to_json()
    return out
