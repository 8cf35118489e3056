"""Exact integer/rational linear algebra and integer polynomials.

Matrices are plain nested lists (rows) of ``int`` or ``Fraction``; numpy
object arrays are accepted wherever a matrix is read.  Nothing here ever
rounds: ranks, kernels and characteristic polynomials are exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

import numpy as np

Number = Union[int, Fraction]
IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]

# Above this dimension char_poly switches to the multi-modular route.
BIGINT_CHARPOLY_MAX_DIM = 40


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out as a proper fraction."""


# --------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients in ascending degree.

    The zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        return cls(int(s) for s in json.loads(text))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(a) if (a != 1 or k == 0) else ""
            terms.append((sign, f"{body}{'*' if body and mono else ''}{mono}"))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s


def poly_divmod(p: IntPoly, d: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over Q; returns ascending quotient and remainder."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in p.coeffs]
    dd = d.degree
    lead = Fraction(d.leading)
    if len(rem) - 1 < dd:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        q = rem[k] / lead
        quot[k - dd] = q
        if q:
            for i, c in enumerate(d.coeffs):
                rem[k - dd + i] -= q * c
    rem = rem[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def poly_divides(d: IntPoly, p: IntPoly) -> bool:
    """True iff ``d`` divides ``p`` exactly in Q[x]."""
    _, rem = poly_divmod(p, d)
    return not rem


def poly_quotient(p: IntPoly, d: IntPoly) -> IntPoly:
    """Exact quotient ``p / d``; raises if the division is not exact over Z."""
    quot, rem = poly_divmod(p, d)
    if rem:
        raise ArithmeticError(f"{d} does not divide {p}")
    if any(q.denominator != 1 for q in quot):
        raise IntegralityError("quotient has non-integer coefficients")
    return IntPoly(int(q) for q in quot)


def _iroot_ceil(x: int, k: int) -> int:
    """Smallest integer r >= 0 with r**k >= x."""
    if x <= 0:
        return 0
    if k == 1:
        return x
    lo, hi = 0, 1 << (x.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def root_bound(p: IntPoly) -> int:
    """Fujiwara bound: every complex root z of ``p`` has ``|z| <= root_bound(p)``."""
    d = p.degree
    if d < 1:
        return 0
    lead = abs(p.leading)
    best = 0
    for k in range(1, d + 1):
        c = abs(p.coeffs[d - k])
        if k == d:
            num, den = c, 2 * lead
        else:
            num, den = c, lead
        best = max(best, _iroot_ceil(-(-num // den), k))
    return 2 * best


def _synthetic_div(coeffs: list[int], r: int) -> tuple[list[int], int]:
    """Divide ascending ``coeffs`` by (x - r); returns (quotient, remainder)."""
    d = len(coeffs) - 1
    out = [0] * d
    acc = 0
    for k in range(d, 0, -1):
        acc = acc * r + coeffs[k]
        out[k - 1] = acc
    return out, acc * r + coeffs[0]


def integer_roots(p: IntPoly) -> list[tuple[int, int]]:
    """All integer roots of ``p`` with multiplicities, largest root first."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every integer as a root")
    cs = list(p.coeffs)
    found: list[tuple[int, int]] = []
    zeros = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        zeros += 1
    if zeros:
        found.append((0, zeros))
    if len(cs) <= 1:
        return sorted(found, reverse=True)
    c0 = abs(cs[0])
    bound = root_bound(IntPoly(cs))
    candidates = []
    for r in range(1, bound + 1):
        if c0 % r == 0:
            candidates.extend((r, -r))
    for r in candidates:
        mult = 0
        while len(cs) > 1:
            q, rem = _synthetic_div(cs, r)
            if rem:
                break
            cs = q
            mult += 1
        if mult:
            found.append((r, mult))
    return sorted(found, reverse=True)


# --------------------------------------------------------------------------
# matrices


def _rows(M) -> list[list]:
    if isinstance(M, np.ndarray):
        return [[x.item() if hasattr(x, "item") else x for x in row] for row in M]
    return [list(row) for row in M]


def _to_int_rows(M) -> list[list[int]]:
    """Scale every row by the lcm of its denominators."""
    out = []
    for row in _rows(M):
        fr = [Fraction(x) for x in row]
        lcm = reduce(math.lcm, (f.denominator for f in fr), 1)
        out.append([int(f * lcm) for f in fr])
    return out


def _shape(rows: list[list]) -> tuple[int, int]:
    return len(rows), (len(rows[0]) if rows else 0)


def rat_rank(M) -> int:
    """Exact rank by fraction-free elimination with row-content reduction."""
    rows = [r for r in _to_int_rows(M) if any(r)]
    _, ncols = _shape(rows)
    rank = 0
    for col in range(ncols):
        if rank == len(rows):
            break
        nonzero = [r for r in range(rank, len(rows)) if rows[r][col]]
        if not nonzero:
            continue
        piv = min(nonzero, key=lambda r: abs(rows[r][col]))
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        pc = p[col]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if not f:
                continue
            g = math.gcd(pc, f)
            a, b = pc // g, f // g
            new = [a * x - b * y for x, y in zip(rows[r], p)]
            c = math.gcd(*new)
            if c > 1:
                new = [x // c for x in new]
            rows[r] = new
        rank += 1
    return rank


def rref(M) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    rows = [[Fraction(x) for x in row] for row in _rows(M)]
    nrows, ncols = _shape(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


def _primitive(vec: Sequence[Fraction]) -> list[int]:
    lcm = reduce(math.lcm, (Fraction(x).denominator for x in vec), 1)
    ints = [int(Fraction(x) * lcm) for x in vec]
    g = math.gcd(*ints)
    return [x // g for x in ints] if g > 1 else ints


def nullspace(M, ncols: int | None = None) -> list[list[int]]:
    """Basis of the right kernel as primitive integer vectors."""
    rows = _rows(M)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -red[i][f]
        basis.append(_primitive(vec))
    return basis


def solve_in_span(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Coefficients c with ``sum c_i columns[i] == target``, or None."""
    k = len(columns)
    d = len(target)
    aug = [[Fraction(columns[i][r]) for i in range(k)] + [Fraction(target[r])] for r in range(d)]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for i, pc in enumerate(pivots):
        coeffs[pc] = red[i][k]
    return coeffs


def int_matvec(M, x: Sequence[int]) -> list[int]:
    rows = _rows(M)
    if rows and len(rows[0]) != len(x):
        raise ValueError(f"dimension mismatch: {len(rows[0])} columns vs vector of {len(x)}")
    return [sum(a * b for a, b in zip(row, x) if a) for row in rows]


def int_matmul(A, B) -> IntMatrix:
    ra, rb = _rows(A), _rows(B)
    if ra and len(ra[0]) != len(rb):
        raise ValueError("inner dimensions differ")
    cols = list(zip(*rb))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in ra]


# --------------------------------------------------------------------------
# characteristic polynomial (Faddeev-LeVerrier)


def _square(M) -> list[list[int]]:
    rows = _rows(M)
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("characteristic polynomial needs a square matrix")
    out = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("integer matrix expected")
                x = x.numerator
            row.append(int(x))
        out.append(row)
    return out


def _faddeev_leverrier_bigint(A: list[list[int]]) -> IntPoly:
    d = len(A)
    a = np.array(A, dtype=object)
    c = [0] * (d + 1)
    c[d] = 1
    m = np.zeros((d, d), dtype=object)
    eye = np.identity(d, dtype=object)
    for k in range(1, d + 1):
        m = a.dot(m) + c[d - k + 1] * eye
        tr = int(np.trace(a.dot(m)))
        if tr % k:
            raise IntegralityError("trace not divisible by step index")
        c[d - k] = -tr // k
    return IntPoly(c)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin for p < 3.3e24
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _primes_below(limit: int):
    p = limit - 1
    while p > 2:
        if _is_prime(p):
            yield p
        p -= 1


def _fl_mod_p(a: np.ndarray, p: int) -> list[int]:
    """Faddeev-LeVerrier over Z/p with float64 BLAS products (all sums exact < 2**53)."""
    d = a.shape[0]
    af = np.mod(a, p).astype(np.float64)
    c = [0] * (d + 1)
    c[d] = 1
    m = np.zeros((d, d))
    for k in range(1, d + 1):
        m = np.mod(af @ m, p)
        m[np.diag_indices(d)] = np.mod(m.diagonal() + c[d - k + 1], p)
        # per-row dot products stay below d*p^2; reduce before summing
        tr = int(np.mod(np.einsum("ij,ji->i", af, m), p).sum()) % p
        c[d - k] = (-tr * pow(k, -1, p)) % p
    return c


def _faddeev_leverrier_modular(A: list[list[int]]) -> IntPoly:
    d = len(A)
    row_sum = max(sum(abs(x) for x in row) for row in A)
    # |eigenvalue| <= row_sum, so |c_k| <= C(d,k) row_sum^k <= (1 + row_sum)^d
    bound = (1 + row_sum) ** d
    limit = int(math.isqrt((1 << 53) // max(d, 1)))
    limit = min(limit, 1 << 24)
    if limit <= d:
        raise ValueError("matrix too large for the modular route")
    a_obj = np.array(A, dtype=object)
    residues: list[list[int]] = []
    primes: list[int] = []
    modulus = 1
    for p in _primes_below(limit):
        residues.append(_fl_mod_p(np.array(np.mod(a_obj, p), dtype=np.int64), p))
        primes.append(p)
        modulus *= p
        if modulus > 2 * bound:
            break
    coeffs = []
    for k in range(d + 1):
        x = 0
        for p, res in zip(primes, residues):
            mp = modulus // p
            x = (x + res[k] * mp * pow(mp, -1, p)) % modulus
        if x > modulus // 2:
            x -= modulus
        coeffs.append(x)
    return IntPoly(coeffs)


def char_poly(M, method: str = "auto") -> IntPoly:
    """Exact ``det(xI - M)`` by Faddeev-LeVerrier.

    ``method`` is ``"bigint"`` (direct, over Z), ``"modular"`` (over Z/p for
    enough primes, recombined by CRT under a Gershgorin coefficient bound) or
    ``"auto"`` which picks by dimension.
    """
    A = _square(M)
    d = len(A)
    if d == 0:
        return IntPoly([1])
    if method == "auto":
        method = "bigint" if d <= BIGINT_CHARPOLY_MAX_DIM else "modular"
    if method == "bigint":
        return _faddeev_leverrier_bigint(A)
    if method == "modular":
        return _faddeev_leverrier_modular(A)
    raise ValueError(f"unknown method {method!r}")


# --------------------------------------------------------------------------
# main characteristic polynomial


def krylov_vectors(A, j: Sequence[int] | None = None) -> tuple[list[list[int]], list[Fraction]]:
    """Walk vectors j, Aj, ..., A^(p-1) j and the coefficients of A^p j on them."""
    rows = _square(A)
    d = len(rows)
    v = list(j) if j is not None else [1] * d
    basis: list[list[int]] = []
    while True:
        coeffs = solve_in_span(basis, v) if basis else (None if any(v) else [])
        if coeffs is not None:
            return basis, coeffs
        basis.append(v)
        v = int_matvec(rows, v)


def main_poly(A, j: Sequence[int] | None = None) -> IntPoly:
    """Minimal monic polynomial of ``A`` on the walk space of ``j`` (all-ones by default).

    Raises :class:`IntegralityError` if a coefficient is not an integer.
    """
    basis, coeffs = krylov_vectors(A, j)
    p = len(basis)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise IntegralityError(f"non-integral main polynomial coefficient {c}")
        out.append(-int(c))
    out.append(1)
    assert len(out) == p + 1
    return IntPoly(out)
