"""Orthogonal complex structures on the 6-plane orthogonal to <1, e1>.

The 6-plane carries the ordered basis

    (e2, e3, e4, e5, e7, e6)

The last two indices are deliberately swapped: under (e2,...,e7) in natural
order, left multiplication by e1 (the reference structure everything else is
measured against) is *negatively* oriented, because e1*e6 = -e7 in the
generated multiplication table.  With the order fixed here the reference
structure, and hence every structure of the form below, passes the
orientation test with a positive determinant.  Serialized 6x6 matrices use
this basis order.

Every orientation-compatible orthogonal complex structure on the 6-plane is

    J_x(v) = (e1 (v x)) conj(x) / |x|^2

for a unit octonion x determined up to a left unit-complex factor; the
formula is invariant under scaling x, so exact rational representatives of
the ray are accepted everywhere and exact-mode computations never need a
square root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .errors import (DegenerateX, IdenticalStructures, InvalidStructure,
                     NoCommonLine, NotUnit, RankError, VerificationFailed)
from . import linalg
from .frames import normalize, orthogonal_complement_basis
from .octonion import FLOAT_EQ_TOL, MUL_INDEX, MUL_SIGN, Octonion

#: octonion coordinate indices of the ordered basis of the 6-plane
R6_BASIS: Tuple[int, ...] = (2, 3, 4, 5, 7, 6)

ONE = Octonion.basis(0)
E1 = Octonion.basis(1)


def embed6(v: Sequence) -> Octonion:
    c = [0] * 8
    for pos, idx in enumerate(R6_BASIS):
        c[idx] = v[pos]
    return Octonion(c)


def extract6(o: Octonion, tol: float = 1e-9) -> list:
    """Coordinates of o in the 6-plane basis; the <1, e1> components must
    vanish (exactly in exact mode, up to tol otherwise)."""
    r, i1 = o.coords[0], o.coords[1]
    if o.exact:
        if r != 0 or i1 != 0:
            raise InvalidStructure("vector has components along 1 or e1")
    elif abs(float(r)) > tol or abs(float(i1)) > tol:
        raise InvalidStructure("vector has components along 1 or e1")
    return [o.coords[idx] for idx in R6_BASIS]


class ComplexStructureR6:
    """A 6x6 orthogonal matrix J with J^2 = -1, positively oriented, acting
    on the ordered basis (e2, e3, e4, e5, e7, e6)."""

    __slots__ = ("rows", "exact")

    def __init__(self, rows, validate: bool = True, tol: float = 1e-9):
        if isinstance(rows, np.ndarray):
            self.rows = tuple(tuple(float(x) for x in row) for row in rows)
            self.exact = False
        else:
            rows = tuple(tuple(row) for row in rows)
            self.exact = all(not isinstance(x, float) for row in rows for x in row)
            if self.exact:
                rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
            else:
                rows = tuple(tuple(float(x) for x in row) for row in rows)
            self.rows = rows
        if len(self.rows) != 6 or any(len(r) != 6 for r in self.rows):
            raise InvalidStructure("expected a 6x6 matrix")
        if validate:
            self._validate(tol)

    # -- construction helpers ----------------------------------------------

    def _validate(self, tol: float):
        m = self.rows
        if self.exact:
            if not linalg.is_orthogonal_exact([list(r) for r in m]):
                raise InvalidStructure("J is not orthogonal")
            sq = linalg.mat_mul(m, m)
            for i in range(6):
                for j in range(6):
                    if sq[i][j] != (-1 if i == j else 0):
                        raise InvalidStructure("J^2 is not -identity")
        else:
            a = self.as_array()
            if np.max(np.abs(a @ a.T - np.eye(6))) > tol:
                raise InvalidStructure("J is not orthogonal")
            if np.max(np.abs(a @ a + np.eye(6))) > tol:
                raise InvalidStructure("J^2 is not -identity")
        if self.orientation_sign() <= 0:
            raise InvalidStructure("J is not orientation-compatible")

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.rows])

    def apply6(self, v: Sequence) -> list:
        return linalg.mat_vec(self.rows, list(v))

    def apply(self, o: Octonion) -> Octonion:
        return embed6(self.apply6(extract6(o)))

    def orientation_sign(self) -> int:
        """Sign of det(u, Ju, v, Jv, w, Jw) for a J-complex basis (u, v, w)
        built greedily from the standard basis."""
        cols: List[list] = []
        taken: List[list] = []

        def residual(v):
            r = list(v)
            for t in taken:
                tt = sum(x * x for x in t)
                coeff = sum(x * y for x, y in zip(r, t)) / tt
                r = [x - coeff * y for x, y in zip(r, t)]
            return r

        k = 0
        while len(cols) < 6:
            v = [1 if i == k else 0 for i in range(6)]
            k += 1
            r = residual(v)
            nz = any(x != 0 for x in r) if self.exact else \
                max(abs(float(x)) for x in r) > 1e-6
            if not nz:
                continue
            jr = self.apply6(r)
            cols.append(r)
            cols.append(jr)
            taken.append(r)
            taken.append(jr)
        m = [[cols[j][i] for j in range(6)] for i in range(6)]
        d = linalg.det(m) if self.exact else np.linalg.det(np.array(m, dtype=float))
        return 1 if d > 0 else (-1 if d < 0 else 0)

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexStructureR6):
            return NotImplemented
        if self.exact and other.exact:
            return self.rows == other.rows
        return self.distance(other) <= FLOAT_EQ_TOL

    def distance(self, other: "ComplexStructureR6") -> float:
        return float(np.max(np.abs(self.as_array() - other.as_array())))

    def __repr__(self) -> str:
        return "ComplexStructureR6(%r)" % (self.rows,)

    # -- serialization -------------------------------------------------------

    def to_strings(self) -> list:
        """Row-major 6x6 nested list of scalar strings."""
        if self.exact:
            return [[str(x) for x in row] for row in self.rows]
        return [[repr(float(x)) for x in row] for row in self.rows]

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "ComplexStructureR6":
        flat = [s for row in rows for s in row]
        floatish = any(("." in s or "e" in s or "E" in s) and "/" not in s for s in flat)
        conv = float if floatish else Fraction
        return cls([[conv(s) for s in row] for row in rows])


@dataclass(frozen=True)
class ComplexLine:
    """An oriented J-complex 2-plane given by the pair (u, J u); the two
    vectors are orthogonal with equal norms (unit in float mode, possibly a
    rational rescaling in exact mode)."""

    u: Octonion
    ju: Octonion

    def contains(self, o: Octonion, tol: float = 1e-9) -> bool:
        uu = self.u.norm_sq()
        proj = (o.inner(self.u) / uu) * self.u + (o.inner(self.ju) / uu) * self.ju
        return (o - proj).is_zero(tol)


def _structure_from_formula(image_of) -> ComplexStructureR6:
    cols = [extract6(image_of(embed6([1 if i == pos else 0 for i in range(6)])))
            for pos in range(6)]
    return ComplexStructureR6([[cols[j][i] for j in range(6)] for i in range(6)])


def standard_structure(exact: bool = True) -> ComplexStructureR6:
    """Left multiplication by e1, restricted to the 6-plane."""
    e1 = E1 if exact else Octonion([0.0, 1.0] + [0.0] * 6)
    return _structure_from_formula(lambda v: e1 * v)


def j_from_octonion(x: Octonion) -> ComplexStructureR6:
    """The structure v -> (e1 (v x)) conj(x) / |x|^2.

    x may be any nonzero octonion; the formula only depends on the ray
    through x, which keeps exact rational inputs exact.
    """
    n = x.norm_sq()
    if (x.exact and n == 0) or (not x.exact and float(n) < 1e-30):
        raise NotUnit("x must be nonzero")
    e1 = E1 if x.exact else Octonion([0.0, 1.0] + [0.0] * 6)
    xc = x.conjugate()
    return _structure_from_formula(lambda v: (e1 * (v * x)) * xc / n)


def equivalent(x: Octonion, y: Octonion, tol: float = FLOAT_EQ_TOL) -> bool:
    """Same structure, i.e. y is a (complex) multiple of x.

    Decided by comparing J_x and J_y; cross-checked against the span
    criterion that y conj(x) lies in <1, e1> (the two always agree).
    """
    same_j = j_from_octonion(x) == j_from_octonion(y)
    w = y * x.conjugate()
    if x.exact and y.exact:
        span = all(w.coords[k] == 0 for k in range(2, 8)) and not w.is_zero()
    else:
        scale = max(1.0, float(w.norm_sq()) ** 0.5)
        span = all(abs(float(w.coords[k])) <= tol * scale for k in range(2, 8))
    if span != same_j:
        raise VerificationFailed(
            "span criterion and structure comparison disagree (%r vs %r)" % (span, same_j))
    return same_j


def _kernel6(rows, exact: bool, rtol: float = 1e-7):
    if exact:
        return linalg.kernel_basis(rows)
    return [list(v) for v in linalg.kernel_basis_float(np.array(rows, dtype=float), rtol)]


def recover_x(j: ComplexStructureR6) -> Octonion:
    """A representative x with j_from_octonion(x) == j.

    Steps: the fixed line L = ker(J - J_std) is 2-dimensional for J distinct
    from the standard structure; A = <1, e1> + L is a quaternion subalgebra;
    for any nonzero I orthogonal to A, l = J(I) I^{-1} is the unit imaginary
    element of A by which J acts on the complement of A, and x = 1 - e1*l
    conjugates e1 onto l (with the special branch l = -e1 handled by taking
    any unit imaginary of A orthogonal to e1).  Exact inputs produce an exact
    (generally non-unit) representative of the ray.
    """
    std = standard_structure(exact=j.exact)
    if j == std:
        return ONE if j.exact else Octonion([1.0] + [0.0] * 7)
    diff = linalg.mat_sub(j.rows, std.rows)
    ker = _kernel6([list(r) for r in diff], j.exact)
    if len(ker) == 6:
        return ONE if j.exact else Octonion([1.0] + [0.0] * 7)
    if len(ker) != 2:
        raise RankError("fixed space of J has dimension %d, expected 2" % len(ker))
    u = embed6(ker[0])
    e1 = E1 if j.exact else Octonion([0.0, 1.0] + [0.0] * 6)
    one = ONE if j.exact else Octonion([1.0] + [0.0] * 7)
    if j.exact:
        comp = orthogonal_complement_basis([one, e1, u, e1 * u])
        big_i = comp[0]
    else:
        rows = np.array([[float(c) for c in o.coords]
                         for o in (one, e1, u, e1 * u)])
        big_i = Octonion(linalg.kernel_basis_float(rows)[0])
    l = (j.apply(big_i) * big_i.conjugate()) / big_i.norm_sq()
    if not _sanity_l(l, one, e1, u, j.exact):
        raise VerificationFailed("recovered rotation element fails its invariants")
    antipodal = (l == -e1) if j.exact else (l + e1).norm() < 1e-6
    if antipodal:
        x = u if j.exact else normalize(u)
    else:
        # x = 1 - e1*l solves e1 x = x l:  e1(1 - e1 l) = e1 + l = (1 - e1 l) l
        # by associativity inside the subalgebra generated by e1 and l, hence
        # conj(x) e1 x = |x|^2 l.  It vanishes exactly when l = -e1.
        x = one - e1 * l
        if not j.exact:
            x = normalize(x)
    back = j_from_octonion(x)
    bad = (back != j) if j.exact else back.distance(j) > 1e-9
    if bad:
        raise VerificationFailed("recovered x does not reproduce J")
    return x


def _sanity_l(l: Octonion, one: Octonion, e1: Octonion, u: Octonion, exact: bool) -> bool:
    if exact:
        if l.coords[0] != 0 or l.norm_sq() != 1:
            return False
    else:
        if abs(float(l.coords[0])) > 1e-9 or abs(float(l.norm_sq()) - 1.0) > 1e-9:
            return False
    # l must lie in the quaternion subalgebra spanned by (1, e1, u, e1 u)
    span = [one, e1, u, e1 * u]
    proj = Octonion.zero()
    for b in span:
        proj = proj + (l.inner(b) / b.norm_sq()) * b
    return (l - proj).is_zero(1e-9)


def common_line(j1: ComplexStructureR6, j2: ComplexStructureR6) -> ComplexLine:
    """The unique complex line on which two distinct orthogonal structures
    agree (kernel of their difference, always 2-dimensional)."""
    if j1 == j2:
        raise IdenticalStructures("every line is common to identical structures")
    exact = j1.exact and j2.exact
    diff = linalg.mat_sub(j1.rows, j2.rows)
    ker = _kernel6([list(r) for r in diff], exact)
    if len(ker) == 0:
        raise NoCommonLine("distinct orthogonal structures must share a line")
    if len(ker) != 2:
        raise RankError("agreement space has dimension %d, expected 2" % len(ker))
    u = embed6(ker[0])
    if not exact:
        u = normalize(u)
    return ComplexLine(u, j1.apply(u))


@dataclass
class QuaternionBlockForm:
    """Block description of J_x: left multiplication by e1 on the quaternion
    subalgebra A through (1, e1, x), and by l = conj(x) e1 x on its
    complement."""

    a_basis: Tuple[Octonion, ...]
    a_perp_basis: Tuple[Octonion, ...]
    l: Octonion
    axis: Octonion          # imaginary part of x (not normalized)
    cos_2theta: object      # exact in exact mode
    rotation_sense: int     # +1/-1: sign s with l = Rodrigues(e1, axis, s*2theta)


def quaternion_coordinate_form(x: Octonion) -> QuaternionBlockForm:
    """Certified block decomposition of J_x for x outside <1, e1>.

    Verifies on a basis that J_x is left multiplication by e1 on A and left
    multiplication by l = conj(x) e1 x / |x|^2 on the orthogonal complement
    of A, and reports the axis/angle data of l as a rotation of e1.
    """
    v = x - x.inner(ONE) * ONE - x.inner(E1) * E1
    if v.is_zero(1e-9):
        raise DegenerateX("x lies in <1, e1>; the block split is degenerate")
    exact = x.exact
    one = ONE if exact else Octonion([1.0] + [0.0] * 7)
    e1 = E1 if exact else Octonion([0.0, 1.0] + [0.0] * 6)
    n = x.norm_sq()
    a_basis = (one, e1, v, e1 * v)
    if exact:
        a_perp = tuple(orthogonal_complement_basis(list(a_basis)))
    else:
        rows = np.array([[float(c) for c in o.coords] for o in a_basis])
        a_perp = tuple(Octonion(r) for r in linalg.kernel_basis_float(rows))
    j = j_from_octonion(x)
    l = ((x.conjugate() * e1) * x) / n
    tol = 0.0 if exact else 1e-9
    for b in (v, e1 * v):
        if not (j.apply(b) - e1 * b).is_zero(tol if tol else FLOAT_EQ_TOL):
            raise VerificationFailed("J_x is not left multiplication by e1 on A")
    for w in a_perp:
        if not (j.apply(w) - l * w).is_zero(tol if tol else 1e-9):
            raise VerificationFailed("J_x is not left multiplication by l on A-perp")
    cos2, sense = _rotation_data(x, l, n, e1)
    return QuaternionBlockForm(a_basis, a_perp, l, x.imag(), cos2, sense)


def _rotation_data(x: Octonion, l: Octonion, n, e1: Octonion):
    """cos(2 theta) = (2 x0^2 - |x|^2)/|x|^2, plus the sign s such that l is
    e1 rotated by s*2theta about the imaginary axis of x (Rodrigues form)."""
    x0 = x.coords[0]
    cos2 = (2 * x0 * x0 - n) / n
    w = x.imag()
    ww = w.norm_sq()
    if (x.exact and ww == 0) or (not x.exact and float(ww) < 1e-18):
        # x real: l = e1, rotation trivial
        return cos2, 1
    # sin(2 theta) * |w_unit x e1 component|: compare against both senses
    cross = ((w * e1) - (e1 * w)) / 2     # imaginary cross product, scaled by |w|
    dot = w.inner(e1)
    # Rodrigues about unit axis w/|w| by angle 2t:
    #   R(e1) = e1 cos2t + (w x e1)/|w| sin2t + w <w,e1>/|w|^2 (1 - cos2t)
    # sin(2t) = 2 x0 |w| / n  (up to the sense being reported)
    sin2_scaled = 2 * x0 / n              # sin(2t)/|w|
    base = cos2 * e1 + (dot * (1 - cos2) / ww) * w
    matched = [s for s in (1, -1)
               if (base + (s * sin2_scaled) * cross - l).is_zero(1e-9)]
    if not matched:
        raise VerificationFailed("l is not a rotation of e1 about the axis of x")
    # angle 0 or pi: the two senses coincide, reported as neutral
    return cos2, (matched[0] if len(matched) == 1 else 0)


# ---------------------------------------------------------------------------
# projective coordinates
# ---------------------------------------------------------------------------

#: octonion indices of the left-complex-module basis (1, e2, e4, e6)
CP3_MODULE_BASIS: Tuple[int, ...] = (0, 2, 4, 6)


@dataclass(frozen=True)
class CP3Point:
    """Projective 4-tuple of complex coordinates (each a (re, im) pair) over
    the left-complex-module basis (1, e2, e4, e6)."""

    coords: Tuple[Tuple[object, object], ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CP3Point):
            return NotImplemented
        # projective equality: all complex 2x2 minors vanish
        exact = all(not isinstance(t, float) for zw in self.coords + other.coords for t in zw)
        scale = 1.0
        if not exact:
            scale = max(1.0, max(abs(float(t)) for zw in self.coords + other.coords for t in zw))
        for i in range(4):
            for j in range(i + 1, 4):
                zi, zj = self.coords[i], self.coords[j]
                wi, wj = other.coords[i], other.coords[j]
                re = zi[0] * wj[0] - zi[1] * wj[1] - (zj[0] * wi[0] - zj[1] * wi[1])
                im = zi[0] * wj[1] + zi[1] * wj[0] - (zj[0] * wi[1] + zj[1] * wi[0])
                if exact:
                    if re != 0 or im != 0:
                        return False
                elif max(abs(float(re)), abs(float(im))) > FLOAT_EQ_TOL * scale * scale:
                    return False
        return True


def to_cp3(x: Octonion) -> CP3Point:
    """Coordinates of x in the left-complex-module basis (1, e2, e4, e6),
    as a projective point (well defined on phase classes)."""
    coords = []
    c = x.coords
    for b in CP3_MODULE_BASIS:
        k, s = MUL_INDEX[1][b], MUL_SIGN[1][b]   # e1 * e_b = s * e_k
        coords.append((c[b], s * c[k]))
    return CP3Point(tuple(coords))


# ---------------------------------------------------------------------------
# float sampling of structures
# ---------------------------------------------------------------------------

def random_structure_float(rng: np.random.Generator) -> ComplexStructureR6:
    """Q J_std Q^T for Haar Q in SO(6): a random orientation-compatible
    orthogonal structure."""
    from .sampling import haar_orthogonal
    q = haar_orthogonal(rng, 6, special=True)
    std = standard_structure(exact=False).as_array()
    return ComplexStructureR6(q @ std @ q.T)
