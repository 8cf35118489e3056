"""Spectrum of the Queens graph: floating eigenvalues plus exact certificates.

Multiplicity claims are settled in exact arithmetic (integer eigenvectors,
exact ranks, exact characteristic polynomials).  The floating spectrum is
used for the full eigenvalue list, for clustering and for main/non-main
classification.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field

import numpy as np

from queensgraph.board import QueensGraph, build_graph
from queensgraph.cliquepart import minus_m_eigen_system, queens_ecp
from queensgraph.exactlin import char_poly, int_matvec, integer_roots, rat_rank

DEFAULT_TOL = 1e-8
# n*n above this skips the exact characteristic polynomial.
EXACT_DIM_CAP = 144

X4_STENCIL = (
    (0, 1, -1, 0),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, -1, 1, 0),
)


@dataclass(frozen=True)
class Certificate:
    eigenvalue: int
    multiplicity_lower_bound: int
    method: str
    exact: bool = False  # True when the bound is also an upper bound


@dataclass
class EigenReport:
    """Eigenvalues in ascending order and their clusters (value, multiplicity)."""

    n: int
    eigenvalues: np.ndarray
    clusters: list[tuple[float, int]]
    residual_bound: float
    exact_certificates: list[Certificate] = field(default_factory=list)
    eigenvectors: np.ndarray | None = field(default=None, repr=False)

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    def multiplicity_near(self, value: float, tol: float = 1e-6) -> int:
        return sum(m for v, m in self.clusters if abs(v - value) <= tol)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "eigenvalues": [repr(float(x)) for x in self.eigenvalues],
            "clusters": [{"value": repr(float(v)), "multiplicity": m} for v, m in self.clusters],
            "residual_bound": repr(float(self.residual_bound)),
            "certificates": [
                {
                    "eigenvalue": str(c.eigenvalue),
                    "multiplicity_lower_bound": str(c.multiplicity_lower_bound),
                    "method": c.method,
                    "exact": c.exact,
                }
                for c in self.exact_certificates
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        """Rows ``n,lambda,multiplicity,certified``, one per cluster."""
        certified = {c.eigenvalue for c in self.exact_certificates}
        buf = io.StringIO()
        buf.write("n,lambda,multiplicity,certified\n")
        for v, m in self.clusters:
            r = round(v)
            cert = abs(v - r) < 1e-6 and r in certified
            buf.write(f"{self.n},{v!r},{m},{str(cert).lower()}\n")
        return buf.getvalue()


def cluster(values: np.ndarray, gap: float) -> list[tuple[float, int]]:
    """Group sorted values whose consecutive gaps are at most ``gap``."""
    out: list[tuple[float, int]] = []
    if len(values) == 0:
        return out
    start = 0
    for k in range(1, len(values) + 1):
        if k == len(values) or values[k] - values[k - 1] > gap:
            chunk = values[start:k]
            out.append((float(np.mean(chunk)), k - start))
            start = k
    return out


def dense_spectrum(g: QueensGraph, tol: float = DEFAULT_TOL) -> EigenReport:
    """All eigenvalues of the adjacency matrix by LAPACK ``eigh``.

    Eigenvalues closer than ``tol * ||A||_inf`` are clustered together.
    """
    A = g.matrix.astype(np.float64)
    vals, vecs = np.linalg.eigh(A)
    if not np.all(np.isfinite(vals)):
        raise np.linalg.LinAlgError("eigensolver returned non-finite values")
    resid = float(np.max(np.abs(A @ vecs - vecs * vals))) if vals.size else 0.0
    norm_inf = float(np.max(A.sum(axis=1))) if vals.size else 0.0
    gap = tol * max(norm_inf, 1.0)
    return EigenReport(g.n, vals, cluster(vals, gap), resid, eigenvectors=vecs)


def spectrum_of(M: np.ndarray) -> np.ndarray:
    """Eigenvalues of a general square matrix, real parts sorted ascending."""
    vals = np.linalg.eigvals(np.asarray(M, dtype=np.float64))
    return np.sort(vals.real)


# --------------------------------------------------------------------------
# integer eigenvector families


def _grid_vector(n: int, fn) -> list[int]:
    return [fn(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def row_vector(n: int, i: int) -> list[int]:
    return _grid_vector(n, lambda x, y: int(x == i))


def col_vector(n: int, j: int) -> list[int]:
    return _grid_vector(n, lambda x, y: int(y == j))


def sum_vector(n: int, k: int) -> list[int]:
    return _grid_vector(n, lambda x, y: int(x + y == k))


def diff_vector(n: int, ell: int) -> list[int]:
    return _grid_vector(n, lambda x, y: int(x - y == ell))


def _combine(*terms: tuple[int, list[int]]) -> list[int]:
    out = [0] * len(terms[0][1])
    for coef, vec in terms:
        for k, x in enumerate(vec):
            out[k] += coef * x
    return out


@dataclass(frozen=True)
class EigenvectorFamily:
    kind: str  # "F", "Y" or "Z"
    n: int
    eigenvalue: int
    vectors: tuple[tuple[int, ...], ...]
    keys: tuple
    usable: bool = True  # False for Z on even boards

    def __len__(self) -> int:
        return len(self.vectors)


def f_vector(n: int, a: int, b: int) -> list[int]:
    """The 4x4 stencil placed with its top-left corner on square ``(a, b)``."""
    vec = [0] * (n * n)
    for di in range(4):
        for dj in range(4):
            vec[(a - 1 + di) * n + (b - 1 + dj)] = X4_STENCIL[di][dj]
    return vec


def build_F_family(n: int) -> EigenvectorFamily:
    """The ``(n-3)**2`` translates of the stencil; eigenvectors for -4."""
    if n < 4:
        raise ValueError("the -4 family needs n >= 4")
    keys = tuple((a, b) for a in range(1, n - 2) for b in range(1, n - 2))
    vecs = tuple(tuple(f_vector(n, a, b)) for a, b in keys)
    return EigenvectorFamily("F", n, -4, vecs, keys)


def y_vector(n: int, i: int) -> list[int]:
    m = n + 1 - i
    return _combine((1, col_vector(n, i)), (1, col_vector(n, m)), (-1, row_vector(n, i)), (-1, row_vector(n, m)))


def z_vector(n: int) -> list[int]:
    return _combine((1, diff_vector(n, 0)), (-1, sum_vector(n, n + 1)))


def build_YZ_families(n: int) -> tuple[EigenvectorFamily, EigenvectorFamily]:
    """Row/column family Y (``ceil(n/2)`` vectors) and the diagonal vector Z."""
    if n < 3:
        raise ValueError("the n-4 families need n >= 3")
    keys = tuple(range(1, (n + 1) // 2 + 1))
    Y = EigenvectorFamily("Y", n, n - 4, tuple(tuple(y_vector(n, i)) for i in keys), keys)
    Z = EigenvectorFamily("Z", n, n - 4, (tuple(z_vector(n)),), (0,), usable=n % 2 == 1)
    return Y, Z


def is_eigenvector(g: QueensGraph, vec, value: int) -> bool:
    """Exact check ``A v == value * v`` for a nonzero integer vector."""
    if not any(vec):
        return False
    return int_matvec(g.int_matrix(), vec) == [value * x for x in vec]


def _eigen_checker(g: QueensGraph):
    A = g.int_matrix()

    def check(vec, value):
        return any(vec) and int_matvec(A, vec) == [value * x for x in vec]

    return check


def certify_minus4_multiplicity(n: int) -> int:
    """Exact multiplicity of -4, cross-checked against the stencil basis.

    Returns the corank of the line-sum system; raises AssertionError if it
    is not ``(n-3)**2`` or if the stencil family is not an exact basis of
    eigenvectors.
    """
    if n < 4:
        raise ValueError("n >= 4 required")
    g = build_graph(n)
    P = queens_ecp(g)
    system = minus_m_eigen_system(P)
    corank = g.order - rat_rank(system)
    expected = (n - 3) ** 2
    assert corank == expected, f"corank {corank} != {expected} at n={n}"
    F = build_F_family(n)
    check = _eigen_checker(g)
    for key, vec in zip(F.keys, F.vectors):
        assert check(vec, -4), f"stencil at {key} is not a -4 eigenvector"
    assert rat_rank(F.vectors) == expected, "stencil family is rank deficient"
    return corank


def z_is_eigenvector(n: int) -> bool:
    g = build_graph(n)
    return is_eigenvector(g, z_vector(n), n - 4)


def certify_n_minus_4_lower_bound(n: int) -> int:
    """Certified lower bound on the multiplicity of ``n - 4``.

    Every Y vector (and Z on odd boards) is verified exactly before the rank
    of the verified set is taken.
    """
    g = build_graph(n)
    check = _eigen_checker(g)
    Y, Z = build_YZ_families(n)
    verified = []
    for key, vec in zip(Y.keys, Y.vectors):
        assert check(vec, n - 4), f"Y_{key} is not an eigenvector for n={n}"
        verified.append(vec)
    z_ok = check(Z.vectors[0], n - 4)
    assert z_ok == Z.usable, f"Z eigenvector status {z_ok} unexpected for n={n}"
    if z_ok:
        verified.append(Z.vectors[0])
    return rat_rank(verified)


def n_minus_4_bound_formula(n: int) -> int:
    return (n - 2) // 2 if n % 2 == 0 else (n + 1) // 2


def certified_report(n: int, tol: float = DEFAULT_TOL) -> EigenReport:
    """Floating spectrum with the exact -4 and n-4 certificates attached."""
    rep = dense_spectrum(build_graph(n), tol)
    if n >= 4:
        rep.exact_certificates.append(Certificate(-4, certify_minus4_multiplicity(n), "line-sum corank", True))
    if n >= 3:
        rep.exact_certificates.append(
            Certificate(n - 4, certify_n_minus_4_lower_bound(n), "Y/Z integer eigenvectors")
        )
    return rep


# --------------------------------------------------------------------------
# main eigenvalues


@dataclass(frozen=True)
class MainFlag:
    value: float
    multiplicity: int
    main: bool
    projection: float


def classify_main(report: EigenReport, tol: float = 1e-6) -> list[MainFlag]:
    """A cluster is main iff the all-ones vector has a projection above ``tol``."""
    vecs = report.eigenvectors
    if vecs is None:
        raise ValueError("report carries no eigenvectors")
    ones = np.ones(vecs.shape[0])
    coords = vecs.T @ ones
    flags = []
    start = 0
    for value, mult in report.clusters:
        proj = float(np.linalg.norm(coords[start : start + mult]))
        flags.append(MainFlag(value, mult, proj > tol, proj))
        start += mult
    return flags


def minus4_non_main(n: int) -> bool:
    """Exact: every stencil vector is orthogonal to the all-ones vector."""
    return all(sum(v) == 0 for v in build_F_family(n).vectors)


# --------------------------------------------------------------------------
# integer eigenvalues


def conjectured_integer_eigenvalues(n: int) -> set[int] | None:
    """The conjectured set of integer eigenvalues (stated for n >= 4)."""
    if n < 4:
        return None
    if n % 2 == 0:
        return {-4, n - 4}
    low = set(range(-4, (n - 11) // 2 + 1))
    high = set(range((n - 5) // 2, n - 3))
    return low | high


@dataclass(frozen=True)
class IntegerScan:
    n: int
    eigenvalues: dict[int, int]  # integer eigenvalue -> multiplicity
    method: str
    conjectured: frozenset[int] | None

    @property
    def distinct(self) -> list[int]:
        return sorted(self.eigenvalues, reverse=True)

    @property
    def agrees(self) -> bool | None:
        if self.conjectured is None:
            return None
        return set(self.eigenvalues) == set(self.conjectured)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "integer_eigenvalues": {str(k): self.eigenvalues[k] for k in self.distinct},
            "conjectured": None if self.conjectured is None else [str(k) for k in sorted(self.conjectured, reverse=True)],
            "agrees": self.agrees,
        }


def integer_eigenvalue_scan(n: int, exact_dim_cap: int = EXACT_DIM_CAP, tol: float = 1e-6) -> IntegerScan:
    """Integer eigenvalues of the n-Queens graph with multiplicities.

    Within ``exact_dim_cap`` the exact characteristic polynomial is factored
    for integer roots.  Beyond it, floating clusters near integers are
    confirmed by the exact corank of ``A - kI``.
    """
    g = build_graph(n)
    conj = conjectured_integer_eigenvalues(n)
    conj = frozenset(conj) if conj is not None else None
    if g.order <= exact_dim_cap:
        roots = integer_roots(char_poly(g.int_matrix()))
        return IntegerScan(n, dict(roots), "charpoly", conj)
    rep = dense_spectrum(g)
    found = {}
    A = g.int_matrix()
    for value, _ in rep.clusters:
        k = round(value)
        if abs(value - k) > tol:
            continue
        shifted = [[a - (k if r == c else 0) for c, a in enumerate(row)] for r, row in enumerate(A)]
        corank = g.order - rat_rank(shifted)
        if corank:
            found[k] = corank
    return IntegerScan(n, found, "float+corank", conj)
