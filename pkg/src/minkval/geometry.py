"""Exact convex polytopes in R^n at desk scale.

Vertex-representation geometry over `fractions.Fraction`: hull pruning,
facet and face enumeration, halfspace splits through the origin, volumes,
and special linear transforms.  Everything that is rational in the input
stays exact; floating point enters only through explicit double-mode
helpers.  Sizes are assumed tiny (n <= 5, a few dozen points), so
brute-force enumeration is used throughout.

Every polytope is assumed to contain the origin (the class the valuation
operators act on); `convex_hull` enforces this, internal constructors
trust the caller.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class GeometryError(Exception):
    pass


class EmptyInputError(GeometryError):
    pass


class OriginNotContainedError(GeometryError):
    pass


class OriginNotInteriorError(GeometryError):
    pass


class SingularMapError(GeometryError):
    pass


class DimensionOutOfRangeError(GeometryError):
    pass


class DimensionMismatchError(GeometryError):
    pass


class DegenerateBasisError(GeometryError):
    pass


class RayOutsideBodyError(GeometryError):
    pass


def frac(x) -> Fraction:
    """Coerce ints, 'p/q' strings, floats and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(xs):
    return tuple(frac(x) for x in xs)


def zero_vec(n):
    return (ZERO,) * n


def unit_vec(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(s, u):
    return tuple(s * a for a in u)


def is_zero_vec(u):
    return all(a == 0 for a in u)


def primitive_int(g):
    """Scale a rational vector to a coprime integer vector, same direction."""
    den = 1
    for a in g:
        den = den * a.denominator // math.gcd(den, a.denominator)
    ints = [int(a * den) for a in g]
    common = 0
    for a in ints:
        common = math.gcd(common, a)
    if common == 0:
        raise DegenerateBasisError("zero vector has no primitive form")
    return tuple(a // common for a in ints)


# ---------------------------------------------------------------------------
# linear algebra


def _rref(rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [a / lead for a in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def mat_rank(rows):
    rows = [r for r in rows if any(a != 0 for a in r)]
    if not rows:
        return 0
    return len(_rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x in Q^ncols : rows @ x = 0}."""
    rows = [r for r in rows if any(a != 0 for a in r)]
    if not rows:
        return [unit_vec(ncols, i) for i in range(ncols)]
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [ZERO] * ncols
        v[fcol] = ONE
        for r, pcol in enumerate(pivots):
            v[pcol] = -red[r][fcol]
        basis.append(tuple(v))
    return basis


def solve_linear(rows, rhs):
    """Solve a square nonsingular system exactly."""
    k = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = _rref(aug)
    if pivots != list(range(k)):
        raise SingularMapError("singular linear system")
    return tuple(red[i][k] for i in range(k))


def mat_det(rows):
    m = [list(r) for r in rows]
    k = len(m)
    det = ONE
    for c in range(k):
        piv = next((i for i in range(c, k) if m[i][c] != 0), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        lead = m[c][c]
        det *= lead
        for i in range(c + 1, k):
            if m[i][c] != 0:
                f = m[i][c] / lead
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def cross_product(vectors):
    """Generalized cross product of n-1 vectors in R^n.

    Orthogonal to all inputs; its length equals the (n-1)-volume of the
    parallelepiped they span.  Built from cofactor determinants, so exact.
    """
    k = len(vectors)
    n = k + 1
    if any(len(v) != n for v in vectors):
        raise DimensionMismatchError("need n-1 vectors of length n")
    out = []
    for j in range(n):
        minor = [[v[c] for c in range(n) if c != j] for v in vectors]
        out.append((-1) ** j * mat_det(minor))
    return tuple(out)


class LinearMap:
    """Square rational matrix acting on column vectors."""

    __slots__ = ("n", "rows", "_det", "_inv")

    def __init__(self, rows):
        rows = tuple(tuple(frac(a) for a in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("matrix must be square")
        self.n = n
        self.rows = rows
        self._det = None
        self._inv = None

    @classmethod
    def identity(cls, n):
        return cls([unit_vec(n, i) for i in range(n)])

    @classmethod
    def from_columns(cls, cols):
        return cls(list(zip(*cols)))

    @classmethod
    def scaling(cls, n, s):
        s = frac(s)
        return cls([[s if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def det(self):
        if self._det is None:
            self._det = mat_det(self.rows)
        return self._det

    @property
    def is_sl(self):
        return self.det == 1

    def __call__(self, x):
        if len(x) != self.n:
            raise DimensionMismatchError("vector length mismatch")
        return tuple(dot(r, x) for r in self.rows)

    def transpose(self):
        return LinearMap(tuple(zip(*self.rows)))

    def inverse(self):
        if self._inv is None:
            if self.det == 0:
                raise SingularMapError("map not invertible")
            n = self.n
            aug = [list(self.rows[i]) + list(unit_vec(n, i)) for i in range(n)]
            red, _ = _rref(aug)
            self._inv = LinearMap([r[n:] for r in red])
        return self._inv

    def compose(self, other):
        if other.n != self.n:
            raise DimensionMismatchError("size mismatch")
        cols = [self(col) for col in zip(*other.rows)]
        return LinearMap.from_columns(cols)

    __matmul__ = compose

    def scale(self, s):
        s = frac(s)
        return LinearMap([[s * a for a in r] for r in self.rows])

    def to_float(self):
        return [[float(a) for a in r] for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LinearMap({self.rows!r})"


# ---------------------------------------------------------------------------
# exact feasibility LP (phase-1 simplex with Bland's rule)


def lp_feasible(A, b):
    """Whether A x = b admits x >= 0, decided exactly."""
    m = len(A)
    nv = len(A[0]) if m else 0
    T = []
    for i in range(m):
        row = [frac(a) for a in A[i]]
        rhs = frac(b[i])
        if rhs < 0:
            row = [-a for a in row]
            rhs = -rhs
        T.append(row + [ONE if j == i else ZERO for j in range(m)] + [rhs])
    ncols = nv + m
    basis = list(range(nv, ncols))
    cost = [sum(T[i][j] for i in range(m)) for j in range(ncols)]
    for j in range(nv, ncols):
        cost[j] -= 1
    obj = sum(T[i][-1] for i in range(m))
    while True:
        enter = next((j for j in range(ncols) if cost[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                r = T[i][-1] / T[i][enter]
                if best is None or r < best or (r == best and basis[i] < basis[leave]):
                    best, leave = r, i
        if leave is None:
            return False
        piv = T[leave][enter]
        T[leave] = [a / piv for a in T[leave]]
        ref = T[leave]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b2 for a, b2 in zip(T[i], ref)]
        f = cost[enter]
        obj -= f * ref[-1]
        cost = [a - f * b2 for a, b2 in zip(cost, ref[:-1])]
        basis[leave] = enter
    return obj == 0


def in_hull(x, points):
    """Exact membership of x in conv(points)."""
    points = list(points)
    if not points:
        return False
    x = tuple(x)
    n = len(x)
    for j in range(n):
        col = [p[j] for p in points]
        if x[j] < min(col) or x[j] > max(col):
            return False
    if x in points:
        return True
    A = [[p[j] for p in points] for j in range(n)]
    A.append([ONE] * len(points))
    b = list(x) + [ONE]
    return lp_feasible(A, b)


# ---------------------------------------------------------------------------
# combinatorics on point sets


def _affine_coords(pts):
    """Coordinates of pts in an exact basis of their affine hull (through pts[0])."""
    p0 = pts[0]
    basis = []
    for p in pts[1:]:
        r = vsub(p, p0)
        if is_zero_vec(r):
            continue
        cand = basis + [r]
        if mat_rank(cand) == len(cand):
            basis.append(r)
    d = len(basis)
    if d == 0:
        return 0, [()] * len(pts)
    gram = [[dot(a, b) for b in basis] for a in basis]
    coords = []
    for p in pts:
        rhs = [dot(vsub(p, p0), b) for b in basis]
        coords.append(solve_linear(gram, rhs))
    return d, coords


def facet_vertex_sets(points):
    """Vertex sets of the facets of conv(points).

    `points` should be extreme points; extra relative-boundary points are
    tolerated and end up listed on the facets they lie on.
    """
    pts = list(points)
    d, coords = _affine_coords(pts)
    if d == 0:
        return []
    seen = set()
    out = []
    for S in itertools.combinations(range(len(pts)), d):
        rows = [vsub(coords[i], coords[S[0]]) for i in S[1:]]
        ker = nullspace(rows, d)
        if len(ker) != 1:
            continue
        g = ker[0]
        c = dot(g, coords[S[0]])
        vals = [dot(g, y) for y in coords]
        hi = max(vals)
        lo = min(vals)
        if hi > c and lo < c:
            continue
        face_idx = frozenset(i for i, v in enumerate(vals) if v == c)
        if face_idx not in seen:
            seen.add(face_idx)
            out.append(tuple(pts[i] for i in sorted(face_idx)))
    return out


def triangulate_points(points):
    """Simplices (as vertex tuples) triangulating conv(points)."""
    pts = list(points)
    d, _ = _affine_coords(pts)
    if len(pts) == d + 1:
        return [tuple(pts)]
    apex = pts[0]
    out = []
    for f in facet_vertex_sets(pts):
        if apex in f:
            continue
        for s in triangulate_points(f):
            out.append((apex,) + s)
    return out


def _face_lattice(points, topdim):
    """All proper faces of conv(points): dict j -> tuple of vertex tuples."""
    out = {}
    seen = set()

    def rec(pts, k):
        for f in facet_vertex_sets(pts):
            key = frozenset(f)
            if key in seen:
                continue
            seen.add(key)
            out.setdefault(k - 1, []).append(f)
            if k - 1 >= 1:
                rec(f, k - 1)

    if topdim >= 1:
        rec(points, topdim)
    return {j: tuple(fs) for j, fs in out.items()}


# ---------------------------------------------------------------------------
# the polytope class


@dataclass(frozen=True)
class FacetData:
    """One facet of a full-dimensional polytope.

    The area vector (outward unit normal times (n-1)-volume) equals
    weight * normal with a primitive integer normal, so every facet sum
    with matching normalization stays rational.
    """

    normal: tuple          # primitive integer outward normal
    offset: Fraction       # support value h_P(normal), >= 0
    weight: Fraction       # area vector = weight * normal
    vertices: tuple

    @property
    def contains_origin(self):
        return self.offset == 0

    @property
    def unit_normal(self):
        norm = math.sqrt(sum(a * a for a in self.normal))
        return tuple(a / norm for a in self.normal)

    @property
    def measure(self):
        """(n-1)-volume of the facet, double mode."""
        return float(self.weight) * math.sqrt(sum(a * a for a in self.normal))

    @property
    def sq_measure(self):
        """Exact square of the facet measure."""
        return self.weight * self.weight * sum(a * a for a in self.normal)


class Polytope:
    """Convex hull of rational points containing the origin.

    Immutable after construction; vertices, facets, faces, triangulations
    and integer scalings are computed lazily and cached.  `_pts` may hold
    redundant (non-extreme) generator points until `vertices` prunes them.
    """

    __slots__ = ("n", "_pts", "_verts", "_dim", "_facets", "_faces", "_fto",
                 "_tri", "_vol", "_iscale", "_surf", "_oloc", "_ops", "_hashv")

    def __init__(self, n, points, *, pruned=False):
        pts = sorted(set(tuple(frac(c) for c in p) for p in points))
        if not pts:
            raise EmptyInputError("no points given")
        if any(len(p) != n for p in pts):
            raise DimensionMismatchError("point length mismatch")
        self.n = n
        self._pts = tuple(pts)
        self._verts = self._pts if (pruned or len(pts) <= 2) else None
        self._dim = None
        self._facets = None
        self._faces = None
        self._fto = {}
        self._tri = None
        self._vol = None
        self._iscale = None
        self._surf = None
        self._oloc = None
        self._ops = {}
        self._hashv = None

    # -- basic geometry ----------------------------------------------------

    @property
    def points(self):
        """Generator points (may include non-extreme ones)."""
        return self._pts

    @property
    def vertices(self):
        if self._verts is None:
            pts = list(self._pts)
            keep = []
            for i, p in enumerate(pts):
                if not in_hull(p, keep + pts[i + 1:]):
                    keep.append(p)
            self._verts = tuple(keep)
        return self._verts

    @property
    def dim(self):
        if self._dim is None:
            p0 = self._pts[0]
            self._dim = mat_rank([vsub(p, p0) for p in self._pts[1:]])
        return self._dim

    def iscale(self):
        """(integer point array, denominator D): point = ints / D."""
        if self._iscale is None:
            den = 1
            for p in self._pts:
                for c in p:
                    den = den * c.denominator // math.gcd(den, c.denominator)
            ints = tuple(tuple(int(c * den) for c in p) for p in self._pts)
            self._iscale = (ints, den)
        return self._iscale

    def support(self, x):
        """h(x) = max over the body of the inner product with x, exact."""
        ints, den = self.iscale()
        best = max(sum(a * b for a, b in zip(x, p)) for p in ints)
        return Fraction(best) / den

    def contains(self, x):
        return in_hull(vec(x), self._pts)

    @property
    def contains_origin(self):
        return self.contains(zero_vec(self.n))

    def origin_location(self):
        """One of 'interior', 'relative-interior', 'relative-boundary', 'outside'.

        'interior' only for full-dimensional bodies; lower-dimensional
        bodies with the origin inside their relative interior report
        'relative-interior'.
        """
        if self._oloc is None:
            o = zero_vec(self.n)
            if not self.contains(o):
                self._oloc = "outside"
            elif self.dim == 0:
                self._oloc = "relative-interior"
            elif any(in_hull(o, f) for f in facet_vertex_sets(self.vertices)):
                # a point of the body on some facet is on the relative boundary
                self._oloc = "relative-boundary"
            else:
                self._oloc = "interior" if self.dim == self.n else "relative-interior"
        return self._oloc

    # -- facets and faces --------------------------------------------------

    @property
    def facets(self):
        """FacetData list; empty for lower-dimensional bodies."""
        if self._facets is None:
            if self.dim < self.n:
                self._facets = ()
            else:
                self._facets = tuple(self._compute_facets())
        return self._facets

    def _compute_facets(self):
        verts = self.vertices
        out = []
        for fverts in facet_vertex_sets(verts):
            p0 = fverts[0]
            rows = [vsub(q, p0) for q in fverts[1:]]
            ker = nullspace(rows, self.n)
            if len(ker) != 1:
                raise GeometryError("degenerate facet")
            g = ker[0]
            c = dot(g, p0)
            hi = max(dot(g, w) for w in verts)
            if hi > c:
                g = vneg(g)
            N = primitive_int(g)
            off = dot(N, p0)
            weight = _facet_weight(fverts, N)
            out.append(FacetData(normal=N, offset=off, weight=weight, vertices=fverts))
        return sorted(out, key=lambda f: f.normal)

    def face_lattice(self):
        """Proper faces by dimension: {j: (vertex tuples...)}, 0 <= j < dim."""
        if self._faces is None:
            self._faces = _face_lattice(self.vertices, self.dim)
        return self._faces

    def faces(self, j):
        return self.face_lattice().get(j, ())

    def faces_through_origin(self, j):
        """j-faces whose point set contains the origin."""
        if j not in self._fto:
            o = zero_vec(self.n)
            self._fto[j] = tuple(f for f in self.faces(j) if in_hull(o, f))
        return self._fto[j]

    # -- measures ----------------------------------------------------------

    def triangulation(self):
        """Full-dimensional triangulation (empty for lower-dimensional)."""
        if self._tri is None:
            if self.dim < self.n:
                self._tri = ()
            else:
                self._tri = tuple(triangulate_points(self.vertices))
        return self._tri

    @property
    def volume(self):
        if self._vol is None:
            if self.dim < self.n:
                self._vol = ZERO
            else:
                total = ZERO
                for s in self.triangulation():
                    rows = [vsub(q, s[0]) for q in s[1:]]
                    total += abs(mat_det(rows))
                self._vol = total / math.factorial(self.n)
        return self._vol

    def surface_atom(self):
        """For an (n-1)-dimensional body: (N, t) with area vector t*N.

        N is the primitive integer normal of the span (which passes through
        the origin), t > 0 rational, and t*|N| is the (n-1)-volume.
        """
        if self._surf is None:
            if self.dim != self.n - 1:
                raise DimensionMismatchError("surface atom needs dim == n-1")
            p0 = self._pts[0]
            ker = nullspace([vsub(p, p0) for p in self._pts[1:]], self.n)
            if len(ker) != 1:
                raise GeometryError("span not a hyperplane")
            N = primitive_int(ker[0])
            t = _facet_weight(self.vertices, N)
            self._surf = (N, t)
        return self._surf

    # -- transforms --------------------------------------------------------

    def map(self, A: LinearMap):
        if A.det == 0:
            raise SingularMapError("polytope image under singular map")
        pts = self._verts if self._verts is not None else self._pts
        return Polytope(self.n, [A(p) for p in pts], pruned=self._verts is not None)

    def scale(self, s):
        s = frac(s)
        if s <= 0:
            raise ValueError("scale must be positive")
        pts = self._verts if self._verts is not None else self._pts
        return Polytope(self.n, [vscale(s, p) for p in pts], pruned=self._verts is not None)

    def reflect(self):
        pts = self._verts if self._verts is not None else self._pts
        return Polytope(self.n, [vneg(p) for p in pts], pruned=self._verts is not None)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.n == other.n and self.vertices == other.vertices

    def __hash__(self):
        if self._hashv is None:
            self._hashv = hash((self.n, self.vertices))
        return self._hashv

    def __repr__(self):
        vs = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in self._pts[:6])
        more = "..." if len(self._pts) > 6 else ""
        return f"Polytope(n={self.n}, [{vs}{more}])"


def _facet_weight(fverts, N):
    """Rational t with area vector of conv(fverts) equal to t * N."""
    nn = dot(N, N)
    total = ZERO
    for simplex in triangulate_points(list(fverts)):
        p0 = simplex[0]
        x = cross_product([vsub(q, p0) for q in simplex[1:]])
        total += abs(dot(x, N)) / nn
    return total / math.factorial(len(N) - 1)


# ---------------------------------------------------------------------------
# construction and splitting


def convex_hull(points, n=None, require_origin=True):
    """Polytope from a point cloud; checks that the origin is inside."""
    pts = [vec(p) for p in points]
    if not pts:
        raise EmptyInputError("no points given")
    if n is None:
        n = len(pts[0])
    P = Polytope(n, pts)
    if require_origin and not P.contains(zero_vec(n)):
        raise OriginNotContainedError("hull does not contain the origin")
    return P


@dataclass(frozen=True)
class SplitCase:
    """A polytope cut by a hyperplane through the origin.

    lower/upper are the pieces on the two closed sides of the plane,
    section is the slice on the plane itself.  degenerate means the plane
    missed the relative interior, so one side is the whole body.
    """

    parent: Polytope
    normal: tuple
    lower: Polytope
    upper: Polytope
    section: Polytope
    degenerate: bool

    def quad(self):
        """(K, L, K union L, K intersect L) for valuation identities."""
        return (self.lower, self.upper, self.parent, self.section)


def halfspace_split(P, normal):
    """Split P by the hyperplane through the origin with the given normal."""
    a = vec(normal)
    if is_zero_vec(a):
        raise DegenerateBasisError("zero normal")
    neg, pos, on = [], [], []
    for p in P._pts:
        s = dot(a, p)
        if s < 0:
            neg.append(p)
        elif s > 0:
            pos.append(p)
        else:
            on.append(p)
    cross = []
    for u in neg:
        su = dot(a, u)
        for w in pos:
            t = su / (su - dot(a, w))
            cross.append(vadd(u, vscale(t, vsub(w, u))))
    lower = Polytope(P.n, neg + on + cross)
    upper = Polytope(P.n, pos + on + cross)
    section = Polytope(P.n, on + cross)
    return SplitCase(parent=P, normal=a, lower=lower, upper=upper,
                     section=section, degenerate=not (neg and pos))


def apply_linear(P, A):
    """Image of P under an invertible LinearMap."""
    if not isinstance(A, LinearMap):
        A = LinearMap(A)
    return P.map(A)


def transform_phi(kind, lam, n, mode="exact"):
    """The four hyperplane-split transforms of the standard simplex battery.

    Kinds 1 and 2 are rational special-linear maps returned exactly.
    Kinds 3 and 4 carry an irrational dilation (1/lam)^(1/n) resp.
    (1/(1-lam))^(1/n); mode "float" returns them as nested float lists,
    mode "shear" drops the dilation and returns the exact rational shear
    (determinant lam resp. 1-lam).
    """
    lam = frac(lam)
    if not 0 < lam < 1:
        raise ValueError("lam must be strictly between 0 and 1")
    if n < 3:
        raise DimensionOutOfRangeError("transforms need n >= 3")
    cols = [list(unit_vec(n, i)) for i in range(n)]
    mixed = [lam if i == 0 else (1 - lam) if i == 1 else ZERO for i in range(n)]
    if kind == 1:
        cols[0] = mixed
        cols[n - 1] = [c / lam for c in cols[n - 1]]
    elif kind == 2:
        cols[1] = mixed
        cols[n - 1] = [c / (1 - lam) for c in cols[n - 1]]
    elif kind in (3, 4):
        cols[0 if kind == 3 else 1] = mixed
        shear = LinearMap.from_columns(cols)
        if mode == "shear":
            return shear
        if mode != "float":
            raise ValueError("kinds 3 and 4 are only available as 'float' or 'shear'")
        s = (1 / float(lam if kind == 3 else 1 - lam)) ** (1.0 / n)
        return [[s * float(a) for a in row] for row in shear.rows]
    else:
        raise ValueError("kind must be 1, 2, 3 or 4")
    return LinearMap.from_columns(cols)


def standard_simplex(d, n, s=1):
    """[o, s e_1, ..., s e_d] in R^n."""
    if not 1 <= d <= n:
        raise DimensionOutOfRangeError("need 1 <= d <= n")
    s = frac(s)
    if s <= 0:
        raise ValueError("scale must be positive")
    pts = [zero_vec(n)] + [vscale(s, unit_vec(n, i)) for i in range(d)]
    return Polytope(n, pts, pruned=True)


def hat_simplex(d, n, s=1):
    """[o, s e_1, s e_3, ..., s e_d]: the companion (d-1)-simplex of T^d."""
    if not 2 <= d <= n:
        raise DimensionOutOfRangeError("need 2 <= d <= n")
    s = frac(s)
    if s <= 0:
        raise ValueError("scale must be positive")
    idx = [0] + list(range(2, d))
    pts = [zero_vec(n)] + [vscale(s, unit_vec(n, i)) for i in idx]
    return Polytope(n, pts, pruned=True)


# ---------------------------------------------------------------------------
# projections


def orthogonalize(basis):
    """Exact Gram-Schmidt without normalization."""
    out = []
    for b in basis:
        v = vec(b)
        for g in out:
            v = vsub(v, vscale(dot(v, g) / dot(g, g), g))
        if is_zero_vec(v):
            raise DegenerateBasisError("dependent basis")
        out.append(v)
    return out


def project_vector(x, basis):
    """Orthogonal projection of x onto span(basis)."""
    x = vec(x)
    out = zero_vec(len(x))
    for g in orthogonalize(basis):
        out = vadd(out, vscale(dot(x, g) / dot(g, g), g))
    return out


def project(P, basis):
    """Image of P under orthogonal projection onto span(basis)."""
    ob = orthogonalize(basis)
    out = zero_vec(P.n)
    pts = []
    for p in P._pts:
        q = out
        for g in ob:
            q = vadd(q, vscale(dot(p, g) / dot(g, g), g))
        pts.append(q)
    return Polytope(P.n, pts)


def span_basis(P):
    """A maximal independent subset of P's points (basis of lin P)."""
    basis = []
    for p in P._pts:
        if is_zero_vec(p):
            continue
        cand = basis + [p]
        if mat_rank(cand) == len(cand):
            basis.append(p)
    return basis


def project_onto_body(x, P):
    """x | P: orthogonal projection of x onto the linear hull of P."""
    basis = span_basis(P)
    if not basis:
        return zero_vec(P.n)
    return project_vector(x, basis)


def in_span(x, P):
    basis = span_basis(P)
    if not basis:
        return is_zero_vec(vec(x))
    return mat_rank(basis + [vec(x)]) == len(basis)


# ---------------------------------------------------------------------------
# serialization and double-mode comparison


def polytope_to_json(P):
    return {
        "n": P.n,
        "vertices": [[str(c) for c in v] for v in P.vertices],
    }


def polytope_from_json(obj, require_origin=True):
    try:
        n = int(obj["n"])
        raw = obj["vertices"]
    except (KeyError, TypeError) as e:
        raise GeometryError(f"bad polytope object: {e}") from None
    mode = obj.get("mode", "exact")
    pts = []
    for row in raw:
        if mode == "float":
            pts.append(tuple(Fraction(float(c)) for c in row))
        else:
            pts.append(tuple(frac(c) for c in row))
    return convex_hull(pts, n=n, require_origin=require_origin)


def polytope_close(P, Q, tol=1e-9):
    """Double-mode comparison: matched sorted vertices within tol."""
    if P.n != Q.n:
        return False
    a = sorted(tuple(float(c) for c in v) for v in P.vertices)
    b = sorted(tuple(float(c) for c in v) for v in Q.vertices)
    if len(a) != len(b):
        return False
    return all(max(abs(x - y) for x, y in zip(u, w)) <= tol for u, w in zip(a, b))
