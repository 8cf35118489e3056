"""Command-line front end.

Subcommands ``graph``, ``spectrum``, ``verify``, ``domination`` and
``conjecture`` each take ``--n`` as a single size or an inclusive range
``a..b``.  JSON output is one envelope::

    {"command": ..., "ok": true|false, "failures": [...], "results": [...]}

with every number written as a decimal string.  The exit status is 0 iff
no check failed; failures are also listed on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from queensgraph.board import (
    build_graph,
    degree_formula,
    edge_count_formula,
    max_n,
)
from queensgraph.cliquepart import eigen_lower_bound, queens_ecp, verify_ecp
from queensgraph.combinat import (
    SearchBudget,
    domination_bounds,
    domination_number,
    gamma_table_csv,
    is_dominating,
    monotonicity_check,
)
from queensgraph.equipart import (
    folded_partition,
    cell_count,
    divisibility_chain,
    divisor_matrix,
    largest_eig_agreement,
    verify_equitable,
)
from queensgraph.exactlin import IntPoly
from queensgraph.spectra import (
    DEFAULT_TOL,
    certified_report,
    integer_eigenvalue_scan,
    minus4_non_main,
    n_minus_4_bound_formula,
)

# characteristic polynomial of the divisor matrix on the 6x6 board
REFERENCE_PB6 = IntPoly.from_descending([1, -21, 73, 109, -686, 580, -8])
# the exact polynomial chain gets slow beyond this
VERIFY_CHAIN_MAX_N = 12


@dataclass
class RunConfig:
    command: str
    ns: list[int]
    tol: float = DEFAULT_TOL
    time_cap_ms: int | None = None
    node_cap: int | None = None
    fmt: str = "json"
    out: str | None = None
    jobs: int = 1


@dataclass
class Outcome:
    n: int
    payload: dict
    failures: list[str] = field(default_factory=list)
    csv: str = ""

    def check(self, cond: bool, what: str) -> None:
        if not cond:
            self.failures.append(f"n={self.n}: {what}")


def parse_n_range(text: str) -> list[int]:
    """``"7"`` or ``"3..10"`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def load_schema(command: str) -> dict:
    """JSON schema shipped for a subcommand's report."""
    text = resources.files("queensgraph").joinpath("schemas", f"{command}.schema.json").read_text("utf-8")
    return json.loads(text)


def decimalize(obj):
    """Turn every number in a JSON-ready structure into a decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, dict):
        return {str(k): decimalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [decimalize(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return decimalize(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# per-n tasks -------------------------------------------------------------


def task_graph(cfg: RunConfig, n: int) -> Outcome:
    g = build_graph(n)
    out = Outcome(n, g.summary())
    out.check(g.size == edge_count_formula(n), f"edge count {g.size} != {edge_count_formula(n)}")
    bad = [v for v in range(g.order) if g.degree[v] != degree_formula(n, g.coord(v))]
    out.check(not bad, f"degree formula fails at vertex {bad[:1]}")
    out.csv = "".join(f"{n},{u + 1},{v + 1}\n" for u, v in g.edges())
    return out


def task_spectrum(cfg: RunConfig, n: int) -> Outcome:
    rep = certified_report(n, cfg.tol)
    out = Outcome(n, rep.to_dict())
    out.check(rep.residual_bound < 1e-8 * max(1, 4 * n), f"eigen residual {rep.residual_bound:.3g}")
    for cert in rep.exact_certificates:
        got = rep.multiplicity_near(cert.eigenvalue, 1e-6)
        if cert.exact:
            out.check(got == cert.multiplicity_lower_bound, f"float multiplicity {got} at {cert.eigenvalue}")
        else:
            out.check(got >= cert.multiplicity_lower_bound, f"float multiplicity {got} at {cert.eigenvalue}")
    if n >= 4:
        out.check(rep.lambda_min >= -4 - 1e-6, f"least eigenvalue {rep.lambda_min} below -4")
    out.csv = rep.to_csv().split("\n", 1)[1]
    return out


def task_verify(cfg: RunConfig, n: int) -> Outcome:
    """Every structural and spectral check that applies at this n, by name."""
    g = build_graph(n)
    checks: dict[str, bool] = {}
    details: dict[str, object] = {}

    checks["size_formula"] = g.size == edge_count_formula(n)
    checks["degree_formula"] = all(g.degree[v] == degree_formula(n, g.coord(v)) for v in range(g.order))

    if n >= 2:
        P = verify_ecp(g, queens_ecp(g).parts)
        rep = certified_report(n, cfg.tol)
        bound = eigen_lower_bound(P)
        details["ecp_parts"] = len(P)
        details["ecp_max_clique_degree"] = P.max_clique_degree
        details["lambda_min"] = rep.lambda_min
        checks["ecp_eigen_lower_bound"] = rep.lambda_min >= bound - 1e-6
        for cert in rep.exact_certificates:
            if cert.eigenvalue == -4:
                details["minus4_multiplicity"] = cert.multiplicity_lower_bound
                checks["minus4_multiplicity"] = cert.multiplicity_lower_bound == (n - 3) ** 2
                checks["minus4_non_main"] = minus4_non_main(n)
            else:
                details["n_minus_4_certified"] = cert.multiplicity_lower_bound
                checks["n_minus_4_bound"] = cert.multiplicity_lower_bound >= n_minus_4_bound_formula(n)

    if n >= 3:
        pi = folded_partition(n)
        ok, _ = verify_equitable(g, pi)
        checks["equitable_partition"] = ok and pi.k == cell_count(n)
        details["cells"] = pi.k
        if ok:
            B = divisor_matrix(g, pi)
            try:
                largest_eig_agreement(g, B, 1e-8)
                checks["largest_eigenvalue_agreement"] = True
            except AssertionError:
                checks["largest_eigenvalue_agreement"] = False
            if n <= VERIFY_CHAIN_MAX_N:
                chain = divisibility_chain(n, pi)
                checks["divisibility_chain"] = chain.holds
                details["main_count"] = chain.n_main
                details["p_B"] = [str(c) for c in chain.p_b.coeffs]
                if n == 6:
                    checks["p_B_reference"] = chain.p_b == REFERENCE_PB6

    out = Outcome(n, {"n": n, "checks": checks, "details": details})
    for name, ok in checks.items():
        out.check(ok, name)
    out.csv = "".join(f"{n},{name},{str(ok).lower()}\n" for name, ok in checks.items())
    return out


def task_domination(cfg: RunConfig, n: int) -> Outcome:
    g = build_graph(n)
    budget = SearchBudget(
        node_cap=cfg.node_cap,
        time_cap=None if cfg.time_cap_ms is None else cfg.time_cap_ms / 1000,
    )
    res = domination_number(g, budget)
    out = Outcome(n, res.to_dict())
    out.payload["result"] = res  # dropped before serialization
    lo, hi = domination_bounds(n)
    if res.optimal:
        out.check(is_dominating(g, res.vertices), "witness does not dominate")
        out.check(lo <= res.value <= hi, f"value {res.value} outside [{lo}, {hi}]")
    return out


def task_conjecture(cfg: RunConfig, n: int) -> Outcome:
    scan = integer_eigenvalue_scan(n)
    out = Outcome(n, scan.to_dict())
    out.check(scan.agrees is not False, f"integer eigenvalues {scan.distinct} differ from the conjectured set")
    out.csv = "".join(f"{n},{k},{scan.eigenvalues[k]}\n" for k in scan.distinct)
    return out


TASKS = {
    "graph": (task_graph, "n,u,v\n"),
    "spectrum": (task_spectrum, "n,lambda,multiplicity,certified\n"),
    "verify": (task_verify, "n,check,passed\n"),
    "domination": (task_domination, "i,j,n,value,lower,upper,optimal\n"),
    "conjecture": (task_conjecture, "n,eigenvalue,multiplicity\n"),
}


def _run_one(args: tuple[RunConfig, int]) -> Outcome:
    cfg, n = args
    return TASKS[cfg.command][0](cfg, n)


def run(cfg: RunConfig) -> tuple[str, list[str]]:
    """Runs the command for every n; returns (rendered output, failures)."""
    work = [(cfg, n) for n in cfg.ns]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = list(pool.map(_run_one, work))
    else:
        outcomes = [_run_one(w) for w in work]
    outcomes.sort(key=lambda o: o.n)
    failures = [f for o in outcomes for f in o.failures]

    if cfg.command == "domination":
        results = [o.payload.pop("result") for o in outcomes]
        gamma = {r.n: r.value for r in results if r.optimal}
        try:
            mono = monotonicity_check(gamma)
        except AssertionError as exc:
            failures.append(str(exc))
            mono = None
        if cfg.fmt == "csv":
            return gamma_table_csv(results), failures
        extra = {"decreases": list(mono.decreases) if mono else None}
    else:
        extra = {}

    if cfg.fmt == "csv":
        header = TASKS[cfg.command][1]
        return header + "".join(o.csv for o in outcomes), failures

    doc = {
        "command": cfg.command,
        "ok": not failures,
        "failures": failures,
        "results": [o.payload for o in outcomes],
        **extra,
    }
    return json.dumps(decimalize(doc), indent=2) + "\n", failures


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="queensgraph", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "graph": "order, size and degree summary; CSV gives the edge list",
        "spectrum": "eigenvalues, clusters and exact certificates",
        "verify": "named pass/fail checks per n",
        "domination": "exact domination numbers or a bracket under caps",
        "conjecture": "integer eigenvalues against the conjectured set",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--n", "--n-range", dest="n", type=parse_n_range, required=True, help="N or A..B")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigenvalue clustering tolerance")
        p.add_argument("--time-cap-ms", type=int, default=None)
        p.add_argument("--node-cap", "--cap", dest="node_cap", type=int, default=None)
        p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="write here instead of stdout")
        p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.tol <= 0:
        parser.error("--tol must be positive")
    if ns.jobs < 1:
        parser.error("--jobs must be at least 1")
    cap = max_n()
    if ns.n[0] < 1 or ns.n[-1] > cap:
        parser.error(f"n must lie in 1..{cap} (QS_MAX_N raises the cap)")
    cfg = RunConfig(ns.command, ns.n, ns.tol, ns.time_cap_ms, ns.node_cap, ns.fmt, ns.out, ns.jobs)

    text, failures = run(cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for f in failures:
        print(f"FAIL {f}", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
