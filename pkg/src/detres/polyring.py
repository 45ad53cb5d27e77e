"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a dictionary mapping monomial exponent tuples to nonzero
``Fraction`` coefficients, tagged with an ordered variable set.  The
representation is canonical: two polynomials are equal exactly when their
variable sets and term maps are equal.  All operations are pure; values are
immutable after construction and safe to share between threads.

Monomial order is graded lexicographic (higher total degree first, ties
broken by the exponent tuple with the leftmost variable most significant).
This order fixes the row/column orderings of the resultant matrices built on
top of this module and the normalization of gcds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]

#: Degree reported for the zero polynomial.
NEG_INFINITY = float("-inf")


class PolyError(ValueError):
    """Raised on malformed polynomial inputs (varset mismatch, bad division)."""


@dataclass(frozen=True)
class VarSet:
    """An ordered collection of distinct variable names.

    The order is significant: it fixes the positions of monomial exponent
    tuples and the graded-lex monomial order.
    """

    names: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise PolyError(f"duplicate variable names in {names!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolyError(f"unknown variable {name!r}") from None

    def extended(self, extra: Iterable[str]) -> "VarSet":
        return VarSet(self.names + tuple(extra))


def glex_key(exps: Exponent) -> tuple[int, Exponent]:
    """Sort key realizing the graded-lex order (ascending)."""
    return (sum(exps), exps)


def monomials_of_degree(nvars: int, d: int) -> list[Exponent]:
    """All exponent tuples of total degree ``d`` in ``nvars`` variables.

    Returned in graded-lex descending order (so ``x**d`` first); the count is
    ``binomial(d + nvars - 1, nvars - 1)``.
    """
    if nvars < 1:
        raise PolyError("nvars must be >= 1")
    if d < 0:
        raise PolyError("degree must be >= 0")
    out = []
    # Choose positions of the d unit increments among the variables.
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=glex_key, reverse=True)
    return out


class Polynomial:
    """Immutable multivariate polynomial with exact rational coefficients."""

    __slots__ = ("varset", "terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[Exponent, Fraction | int]):
        canon: dict[Exponent, Fraction] = {}
        nv = len(varset)
        for exps, coeff in terms.items():
            if len(exps) != nv:
                raise PolyError(
                    f"exponent tuple {exps!r} does not match {nv} variables"
                )
            if any(e < 0 for e in exps):
                raise PolyError(f"negative exponent in {exps!r}")
            c = Fraction(coeff)
            if c != 0:
                canon[tuple(exps)] = c
        object.__setattr__(self, "varset", varset)
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, varset: VarSet) -> "Polynomial":
        return cls(varset, {})

    @classmethod
    def constant(cls, varset: VarSet, value: Fraction | int) -> "Polynomial":
        return cls(varset, {(0,) * len(varset): Fraction(value)})

    @classmethod
    def variable(cls, varset: VarSet, name: str) -> "Polynomial":
        e = [0] * len(varset)
        e[varset.index(name)] = 1
        return cls(varset, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(
        cls, varset: VarSet, exps: Exponent, coeff: Fraction | int = 1
    ) -> "Polynomial":
        return cls(varset, {tuple(exps): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | float:
        """Total degree; ``NEG_INFINITY`` for the zero polynomial."""
        if not self.terms:
            return NEG_INFINITY
        return max(sum(e) for e in self.terms)

    def degree_in(self, names: Iterable[str]) -> int | float:
        """Total degree with respect to a subset of the variables."""
        idx = [self.varset.index(v) for v in names]
        if not self.terms:
            return NEG_INFINITY
        return max(sum(e[i] for i in idx) for e in self.terms)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        """Graded-lex leading (monomial, coefficient); error on zero."""
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        exps = max(self.terms, key=glex_key)
        return exps, self.terms[exps]

    def variables_used(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(self.varset.names[i])
        return used

    # -- ring operations ---------------------------------------------------

    def _check_varset(self, other: "Polynomial") -> None:
        if self.varset != other.varset:
            raise PolyError("operands do not share a variable set")

    def __add__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.varset, other)
        self._check_varset(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return Polynomial(self.varset, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.varset, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.varset, other)
        return self + (-other)

    def __rsub__(self, other: "int | Fraction") -> "Polynomial":
        return Polynomial.constant(self.varset, other) - self

    def __mul__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if c == 0:
                return Polynomial.zero(self.varset)
            return Polynomial(
                self.varset, {e: coeff * c for e, coeff in self.terms.items()}
            )
        self._check_varset(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Polynomial(self.varset, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise PolyError("negative powers are not supported")
        result = Polynomial.constant(self.varset, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.varset, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.varset, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({self!s})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=glex_key, reverse=True):
            c = self.terms[e]
            factors = [
                name if p == 1 else f"{name}^{p}"
                for name, p in zip(self.varset.names, e)
                if p
            ]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    # -- evaluation --------------------------------------------------------

    def evaluate(
        self, point: Mapping[str, Fraction | int]
    ) -> "Fraction | Polynomial":
        """Substitute exact values for variables.

        A full assignment (every variable of the varset bound) returns a
        ``Fraction``; a partial assignment returns a ``Polynomial`` over the
        same varset with the bound variables eliminated.
        """
        values: dict[int, Fraction] = {}
        for name, v in point.items():
            values[self.varset.index(name)] = Fraction(v)
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            for i, val in values.items():
                if e[i]:
                    c = c * val ** e[i]
            e2 = tuple(0 if i in values else x for i, x in enumerate(e))
            s = out.get(e2, 0) + c
            if s:
                out[e2] = s
            elif e2 in out:
                del out[e2]
        if len(values) == len(self.varset):
            return out.get((0,) * len(self.varset), Fraction(0))
        return Polynomial(self.varset, out)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        """JSON form: terms sorted graded-lex descending, exact coefficients."""
        terms = [
            {"c": str(self.terms[e]), "e": list(e)}
            for e in sorted(self.terms, key=glex_key, reverse=True)
        ]
        return {"vars": list(self.varset.names), "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        varset = VarSet(tuple(data["vars"]))
        terms = {
            tuple(t["e"]): Fraction(t["c"]) for t in data["terms"]
        }
        return cls(varset, terms)


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------


def try_exact_div(p: Polynomial, d: Polynomial) -> Polynomial | None:
    """Return ``p / d`` when the division is exact, else ``None``."""
    p._check_varset(d)
    if d.is_zero():
        raise PolyError("division by the zero polynomial")
    if p.is_zero():
        return Polynomial.zero(p.varset)
    q = _dict_try_div(dict(p.terms), d.terms)
    if q is None:
        return None
    return Polynomial(p.varset, q)


def exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    q = try_exact_div(p, d)
    if q is None:
        raise PolyError("division is not exact")
    return q


# ---------------------------------------------------------------------------
# Fraction-free determinant (Bareiss)
# ---------------------------------------------------------------------------


def det_fraction_free(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square polynomial matrix by Bareiss elimination.

    Every division performed is exact by the Bareiss invariant; the result is
    identical to cofactor expansion.
    """
    n = len(matrix)
    if n == 0:
        raise PolyError("empty matrix")
    for row in matrix:
        if len(row) != n:
            raise PolyError("matrix is not square")
    varset = matrix[0][0].varset
    m = [[dict(entry.terms) for entry in row] for row in matrix]
    sign = 1
    prev: dict[Exponent, Fraction] = {(0,) * len(varset): Fraction(1)}
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(varset)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _dict_sub(
                    _dict_mul(m[k][k], m[i][j]), _dict_mul(m[i][k], m[k][j])
                )
                q = _dict_try_div(num, prev)
                if q is None:  # pragma: no cover - Bareiss guarantees exactness
                    raise PolyError("internal error: inexact Bareiss division")
                m[i][j] = q
            m[i][k] = {}
        prev = m[k][k]
    det = Polynomial(varset, m[n - 1][n - 1])
    return -det if sign < 0 else det


# ---------------------------------------------------------------------------
# Multivariate gcd (primitive-part subresultant PRS)
# ---------------------------------------------------------------------------


def multivariate_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Gcd of two polynomials over a common varset.

    The result is normalized to integer content 1 with a positive coefficient
    on the graded-lex leading monomial.  Algorithm: recursive primitive-part
    subresultant PRS over the selected main variable, with content
    extraction; candidate remainders are verified by exact trial division, so
    every early exit is exact.
    """
    p._check_varset(q)
    if p.is_zero() and q.is_zero():
        raise PolyError("gcd(0, 0) is undefined")
    P = _to_int_dict(p.terms)
    Q = _to_int_dict(q.terms)
    g = _gcd_dict(P, Q)
    return Polynomial(p.varset, _normalize_int_dict(g))


def normalize_gcd_style(p: Polynomial) -> Polynomial:
    """Apply the gcd normalization (integer content 1, positive leading
    coefficient under graded-lex) to an arbitrary nonzero polynomial."""
    if p.is_zero():
        raise PolyError("cannot normalize the zero polynomial")
    return Polynomial(p.varset, _normalize_int_dict(_to_int_dict(p.terms)))


# -- dict-level helpers (coefficients: int on the gcd path, Fraction on the
#    determinant path; the arithmetic below is agnostic) --------------------

IntDict = dict  # Exponent -> int | Fraction


def _dict_sub(a: IntDict, b: IntDict) -> IntDict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def _dict_mul(a: IntDict, b: IntDict) -> IntDict:
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out: IntDict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def _dict_scale(a: IntDict, c) -> IntDict:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _dict_pow(a: IntDict, k: int) -> IntDict:
    out: IntDict = None
    base = a
    while True:
        if k & 1:
            out = base if out is None else _dict_mul(out, base)
        k >>= 1
        if not k:
            break
        base = _dict_mul(base, base)
    if out is None:
        raise PolyError("zeroth power not expected here")
    return out


def _coeff_div(a, b):
    """Exact coefficient quotient a / b, or None when a/b is not exact
    (integer case only; Fractions always divide exactly)."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else None
    return Fraction(a) / Fraction(b)


def _dict_try_div(p: IntDict, d: IntDict) -> IntDict | None:
    """Exact division of term dicts under graded-lex; None if not exact."""
    if not d:
        raise PolyError("division by zero")
    if not p:
        return {}
    de = max(d, key=glex_key)
    dc = d[de]
    rest = [(e, c) for e, c in d.items() if e != de]
    r = dict(p)
    q: IntDict = {}
    while r:
        re = max(r, key=glex_key)
        te = tuple(a - b for a, b in zip(re, de))
        if any(x < 0 for x in te):
            return None
        tc = _coeff_div(r[re], dc)
        if tc is None:
            return None
        q[te] = tc
        del r[re]
        for e, c in rest:
            ee = tuple(a + b for a, b in zip(te, e))
            s = r.get(ee, 0) - tc * c
            if s:
                r[ee] = s
            elif ee in r:
                del r[ee]
    return q


def _to_int_dict(terms: Mapping[Exponent, Fraction]) -> IntDict:
    """Clear denominators and return an integer-coefficient dict."""
    if not terms:
        return {}
    den = math.lcm(*(c.denominator for c in terms.values()))
    return {e: int(c * den) for e, c in terms.items()}


def _int_content(p: IntDict) -> int:
    g = 0
    for c in p.values():
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    return g


def _normalize_int_dict(p: IntDict) -> IntDict:
    """Integer content 1, positive graded-lex leading coefficient."""
    if not p:
        return {}
    g = _int_content(p)
    if p[max(p, key=glex_key)] < 0:
        g = -g
    return {e: c // g for e, c in p.items()}


def _deg_in(p: IntDict, v: int) -> int:
    return max((e[v] for e in p), default=-1)


def _monomial_content(p: IntDict) -> Exponent:
    it = iter(p)
    m = list(next(it))
    for e in it:
        for i, x in enumerate(e):
            if x < m[i]:
                m[i] = x
    return tuple(m)


def _shift_exps(p: IntDict, delta: Exponent, sign: int = 1) -> IntDict:
    return {
        tuple(a + sign * b for a, b in zip(e, delta)): c for e, c in p.items()
    }


def _coeffs_in(p: IntDict, v: int) -> dict[int, IntDict]:
    """Coefficients of powers of variable ``v`` (with that slot zeroed)."""
    out: dict[int, IntDict] = {}
    for e, c in p.items():
        k = e[v]
        e0 = e[:v] + (0,) + e[v + 1 :]
        out.setdefault(k, {})[e0] = c
    return out


def _from_coeffs(coeffs: dict[int, IntDict], v: int) -> IntDict:
    out: IntDict = {}
    for k, sub in coeffs.items():
        for e, c in sub.items():
            out[e[:v] + (k,) + e[v + 1 :]] = c
    return out


def _is_const(p: IntDict) -> bool:
    return len(p) <= 1 and all(not any(e) for e in p)


def _gcd_dict(P: IntDict, Q: IntDict) -> IntDict:
    """Primitive-PRS gcd on integer term dicts (result sign-unnormalized)."""
    if not P:
        return dict(Q)
    if not Q:
        return dict(P)
    mP = _monomial_content(P)
    mQ = _monomial_content(Q)
    common = tuple(min(a, b) for a, b in zip(mP, mQ))
    P = _shift_exps(P, mP, -1)
    Q = _shift_exps(Q, mQ, -1)
    icP = _int_content(P)
    icQ = _int_content(Q)
    ic = math.gcd(icP, icQ)
    if icP != 1:
        P = {e: c // icP for e, c in P.items()}
    if icQ != 1:
        Q = {e: c // icQ for e, c in Q.items()}
    g = _gcd_primitive(P, Q)
    g = _dict_scale(g, ic) if ic != 1 else g
    return _shift_exps(g, common, +1)


def _gcd_primitive(P: IntDict, Q: IntDict) -> IntDict:
    """Gcd of integer-primitive dicts with trivial monomial content."""
    if P == Q:
        return dict(P)
    if _is_const(P) or _is_const(Q):
        return {(0,) * _nvars(P, Q): 1}
    nv = _nvars(P, Q)
    shared = [
        v for v in range(nv) if _deg_in(P, v) > 0 and _deg_in(Q, v) > 0
    ]
    if not shared:
        return {(0,) * nv: 1}
    v = min(shared, key=lambda x: min(_deg_in(P, x), _deg_in(Q, x)))
    contP, ppP = _content_pp(P, v)
    contQ, ppQ = _content_pp(Q, v)
    contg = _gcd_dict(contP, contQ)
    g = _prs_gcd(ppP, ppQ, v)
    if _is_const(contg) and next(iter(contg.values())) in (1, -1):
        return g
    return _dict_mul(contg, g)


def _nvars(P: IntDict, Q: IntDict) -> int:
    for e in P or Q:
        return len(e)
    raise PolyError("cannot infer variable count")


def _content_pp(P: IntDict, v: int) -> tuple[IntDict, IntDict]:
    coeffs = list(_coeffs_in(P, v).values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        if _is_const(cont) and abs(next(iter(cont.values()))) == 1:
            break
        cont = _gcd_dict(cont, c)
    if _is_const(cont) and abs(next(iter(cont.values()))) == 1:
        nv = _nvars(P, P)
        return {(0,) * nv: 1}, P
    pp = _dict_try_div(P, cont)
    if pp is None:  # pragma: no cover - content divides by construction
        raise PolyError("internal error: content does not divide")
    return cont, pp


def _lc_in(p: IntDict, v: int) -> IntDict:
    d = _deg_in(p, v)
    return {
        e[:v] + (0,) + e[v + 1 :]: c for e, c in p.items() if e[v] == d
    }


def _prem(A: IntDict, B: IntDict, v: int) -> IntDict:
    """Pseudo-remainder prem(A, B) with respect to variable ``v``."""
    dB = _deg_in(B, v)
    lB = _lc_in(B, v)
    R = dict(A)
    e = _deg_in(A, v) - dB + 1
    steps = 0
    while R and _deg_in(R, v) >= dB:
        dR = _deg_in(R, v)
        lR = {
            ex[:v] + (dR - dB,) + ex[v + 1 :]: c
            for ex, c in _lc_in(R, v).items()
        }
        R = _dict_sub(_dict_mul(lB, R), _dict_mul(lR, B))
        steps += 1
    if steps < e and R:
        R = _dict_mul(R, _dict_pow(lB, e - steps))
    return R


def _prs_gcd(A: IntDict, B: IntDict, v: int) -> IntDict:
    """Subresultant PRS gcd of primitive (w.r.t. ``v``) dicts.

    Each remainder is tried as a gcd candidate by exact trial division into
    the inputs; a successful candidate is the gcd, so the early exit never
    sacrifices exactness.
    """
    if _deg_in(A, v) < _deg_in(B, v):
        A, B = B, A
    P0, Q0 = A, B
    nv = _nvars(A, B)
    one = {(0,) * nv: 1}
    g: IntDict = one
    h: IntDict = one
    while True:
        dA = _deg_in(A, v)
        dB = _deg_in(B, v)
        if dB == 0:
            return dict(one)
        delta = dA - dB
        R = _prem(A, B, v)
        if not R:
            _, pp = _content_pp(B, v)
            return pp
        if _deg_in(R, v) == 0:
            return dict(one)
        cand = {e: c // _int_content(R) for e, c in R.items()}
        if _dict_try_div(P0, cand) is not None and _dict_try_div(Q0, cand) is not None:
            return cand
        divisor = _dict_mul(g, _dict_pow(h, delta)) if delta else g
        Rn = _dict_try_div(R, divisor)
        if Rn is None:  # pragma: no cover - subresultant theory guarantees it
            raise PolyError("internal error: inexact PRS division")
        A, B = B, Rn
        g = _lc_in(A, v)
        if delta > 0:
            hn = _dict_try_div(_dict_pow(g, delta), _dict_pow(h, delta - 1)) if delta > 1 else _dict_pow(g, 1)
            if hn is None:  # pragma: no cover
                raise PolyError("internal error: inexact h update")
            h = hn
