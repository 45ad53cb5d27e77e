"""Rational normal scrolls: equations, Chow forms and plane incidence.

A scroll S(d_1, ..., d_r) lives in projective N-space with ``N + 1 =
sum(d_i + 1)``, coordinates X_{i,j} grouped in blocks of sizes ``d_i + 1``.
Its ideal is generated by the 2x2 minors of a block catalecticant matrix,
and its Chow form is a principal determinantal resultant on the projective
line: a codimension-(r+1) plane, given by a Stiefel matrix of r+1 linear
forms, meets the scroll exactly when that resultant vanishes on the induced
morphism O^(r+1) -> O(d_1) + ... + O(d_r).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .chern_degree import ExistenceError, ProblemSpec, require_existence
from .polyring import (
    PolyError,
    Polynomial,
    VarSet,
    det_fraction_free,
)
from .resultant_engine import (
    ConcreteMorphism,
    GenericMorphism,
    ResultantOutput,
    generic_morphism,
    letter_naming,
    resultant_gcd,
    vanish_test,
)


@dataclass(frozen=True)
class ScrollSpec:
    """Degrees (d_1, ..., d_r) of a rational normal scroll.

    Every degree must be at least 1: a zero block would force an entry of
    geometric degree zero in the Chow morphism, violating the strict
    degree hypothesis of the determinantal resultant.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.degrees:
            raise ExistenceError("scroll needs at least one degree")
        if any(d < 1 for d in self.degrees):
            raise ExistenceError(
                "scroll degrees must all be >= 1; degree-0 blocks are not"
                " supported because the Chow morphism needs strictly"
                " positive entry degrees"
            )

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def N(self) -> int:
        return sum(d + 1 for d in self.degrees) - 1

    def coordinate_names(self) -> tuple[str, ...]:
        """Ambient coordinates X_{i,j}, blocks in scroll order, j ascending."""
        return tuple(
            f"X_{i}_{j}"
            for i, d in enumerate(self.degrees, start=1)
            for j in range(d + 1)
        )

    def block_offset(self, i: int) -> int:
        """Index of X_{i,0} within the coordinate list (i is 1-based)."""
        return sum(d + 1 for d in self.degrees[: i - 1])


def scroll_matrix(spec: ScrollSpec) -> list[list[Polynomial]]:
    """The 2 x (sum d_i) catalecticant block matrix of coordinate forms.

    Block i contributes columns (X_{i,0} ... X_{i,d_i-1}) over
    (X_{i,1} ... X_{i,d_i}).
    """
    varset = VarSet(spec.coordinate_names())
    top = []
    bottom = []
    for i, d in enumerate(spec.degrees, start=1):
        for j in range(d):
            top.append(Polynomial.variable(varset, f"X_{i}_{j}"))
            bottom.append(Polynomial.variable(varset, f"X_{i}_{j + 1}"))
    return [top, bottom]


def scroll_equations(spec: ScrollSpec) -> list[Polynomial]:
    """All 2x2 minors of the scroll matrix, generators of the ideal."""
    M = scroll_matrix(spec)
    cols = len(M[0])
    out = []
    for c1, c2 in combinations(range(cols), 2):
        out.append(det_fraction_free([[M[0][c1], M[0][c2]], [M[1][c1], M[1][c2]]]))
    return out


def parametrize(
    spec: ScrollSpec,
    x: tuple[Fraction | int, Fraction | int],
    lam: Sequence[Fraction | int],
) -> tuple[Fraction, ...]:
    """Point of the scroll: X_{i,j} = lam_i * x^(d_i - j) * y^j."""
    xv, yv = Fraction(x[0]), Fraction(x[1])
    if xv == 0 and yv == 0:
        raise PolyError("(x : y) must be a point of the projective line")
    ls = [Fraction(l) for l in lam]
    if len(ls) != spec.r:
        raise PolyError(f"lambda must have {spec.r} entries")
    if all(l == 0 for l in ls):
        raise PolyError("lambda must be nonzero")
    out = []
    for i, d in enumerate(spec.degrees):
        for j in range(d + 1):
            out.append(ls[i] * xv ** (d - j) * yv**j)
    return tuple(out)


def chow_problem(spec: ScrollSpec) -> ProblemSpec:
    """The principal determinantal resultant problem behind the Chow form.

    On the projective line: E trivial of rank r+1, F the sum of the
    O(d_i), rank bound r-1, i.e. the locus where the induced (r) x (r+1)
    matrix of binary forms drops rank.
    """
    if spec.r < 1:
        raise ExistenceError("scroll must have at least one degree")
    problem = ProblemSpec(
        m=spec.r + 1,
        n=spec.r,
        r=spec.r - 1,
        d=(0,) * (spec.r + 1),
        k=tuple(-d for d in spec.degrees),
    )
    require_existence(problem)
    return problem


def chow_generic_morphism(spec: ScrollSpec) -> GenericMorphism:
    """Generic Chow morphism with letter-per-column parameter names."""
    return generic_morphism(chow_problem(spec), letter_naming())


def chow_form(spec: ScrollSpec, minor_budget: int = 8) -> ResultantOutput:
    """Chow form of the scroll in Stiefel coordinates.

    Degree ``sum(d_i)`` in each column block of the plane matrix.
    """
    return resultant_gcd(
        chow_problem(spec), minor_budget=minor_budget, naming=letter_naming()
    )


# ---------------------------------------------------------------------------
# Planes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneStiefel:
    """A codimension-(r+1) plane as r+1 rows of linear-form coefficients."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        if len({len(r) for r in rows}) > 1:
            raise PolyError("plane rows must have equal length")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def rank(self) -> int:
        from .resultant_engine import rational_rank

        return rational_rank([list(r) for r in self.rows])


def plucker_coords(plane: PlaneStiefel) -> tuple[Fraction, ...]:
    """Maximal minors of the Stiefel matrix, lexicographic column subsets."""
    rows, cols = plane.shape
    if cols < rows:
        raise PolyError("plane matrix has fewer columns than rows")
    out = []
    for sub in combinations(range(cols), rows):
        out.append(_fraction_det([[plane.rows[r][c] for c in sub] for r in range(rows)]))
    return tuple(out)


def _fraction_det(m: list[list[Fraction]]) -> Fraction:
    from .resultant_engine import _numeric_det

    return _numeric_det(m)


def plane_morphism(spec: ScrollSpec, plane: PlaneStiefel) -> ConcreteMorphism:
    """Restrict the plane's linear forms along the scroll parametrization.

    Row t of the result collects, per scroll block i, the binary form
    ``sum_j plane[t][offset(i) + j] * x^(d_i - j) * y^j``; the transposed
    matrix is the concrete Chow morphism of the plane.
    """
    rows, cols = plane.shape
    if rows != spec.r + 1:
        raise PolyError(f"plane must have {spec.r + 1} rows")
    if cols != spec.N + 1:
        raise PolyError(f"plane rows must have {spec.N + 1} entries")
    problem = chow_problem(spec)
    varset = VarSet(tuple(f"x{t}" for t in range(problem.N + 1)))
    entries = []
    for i, d in enumerate(spec.degrees, start=1):
        off = spec.block_offset(i)
        row = []
        for t in range(spec.r + 1):
            terms = {}
            for j in range(d + 1):
                c = plane.rows[t][off + j]
                if c:
                    terms[(d - j, j)] = terms.get((d - j, j), Fraction(0)) + c
            row.append(Polynomial(varset, terms))
        entries.append(tuple(row))
    return ConcreteMorphism(spec=problem, varset=varset, entries=tuple(entries))


def plane_meets_scroll(spec: ScrollSpec, plane: PlaneStiefel) -> bool:
    """Whether the plane meets the scroll (the Chow form vanishes on it)."""
    return vanish_test(chow_problem(spec), plane_morphism(spec, plane))


def plane_diagnostics(spec: ScrollSpec, plane: PlaneStiefel) -> dict:
    """Verdict plus degeneracy flag for a rational plane."""
    rank = plane.rank()
    return {
        "meets_scroll": plane_meets_scroll(spec, plane),
        "stiefel_rank": rank,
        "degenerate": rank < spec.r + 1,
    }
