"""Command line front end.

Exit status: 0 success, 1 parse error, 2 verification failure, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .circuits import enumerate_circuits, support_family, support_sort_key
from .complex import InconsistencyError, UnresolvedFaceError, analyse, build_gamma, gamma_of_polynomial, spanning_check
from .determinantal import (
    CertificationError,
    DeterminantalSpec,
    bar_certificate,
    is_prime,
    is_prime_by_saturation,
    lattice_basis_ideal,
    lattice_of,
    lawrence_ideal,
    sample_orders,
    verify_universal_gb,
)
from .exactalg import LatticeBasis, LatticeError, grading_matrix, kernel_basis, parse_matrix
from .graphs import (
    Graph,
    GraphError,
    chord_report,
    condition_sharp,
    enumerate_circuit_walks,
    gamma_G,
    graph_bar,
    graph_lattice,
    is_primitive,
    named_graph,
    parse_graph,
    sharp_violations,
    theorem_3_14_certificate,
)
from .groebner import (
    Binomial,
    ResourceLimit,
    buchberger,
    default_names,
    format_monomial,
    parse_polynomial,
    radical_member,
)
from .markov import DEFAULT_STATE_LIMIT, MarkovReport, markov_basis

EXIT_OK, EXIT_PARSE, EXIT_VERIFY, EXIT_LIMIT = 0, 1, 2, 3


class VerificationFailure(RuntimeError):
    """Carries the partial report of a failed check."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


@dataclass
class JobSpec:
    command: str
    kind: str
    source: str
    degree_bound: int | None = None
    face_cap: int = 4
    orders: int = 20
    seed: int = 0
    limit_states: int = DEFAULT_STATE_LIMIT
    fmt: str = "text"
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# input


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def load_lattice(kind: str, source: str) -> LatticeBasis:
    """``matrix``: kernel of the matrix; ``lattice``: rows are a basis."""
    M = parse_matrix(_read(source))
    if kind == "matrix":
        return kernel_basis(M)
    return LatticeBasis.from_generators([M.row(i) for i in range(M.rows)], M.cols)


def load_graph(source: str) -> Graph:
    if ":" in source and not Path(source).exists():
        return named_graph(source)
    return parse_graph(_read(source))


def load_det(source: str) -> DeterminantalSpec:
    text = source if not Path(source).exists() else _read(source)
    return DeterminantalSpec.parse(text)


def load_polynomials(source: str, names):
    lines = [ln.strip() for ln in _read(source).splitlines()]
    return [parse_polynomial(ln, names) for ln in lines if ln and not ln.startswith("#")]


# ---------------------------------------------------------------------------
# reports


def _bin(b: Binomial, names=None) -> str:
    return b.format(names)


def _sets(sets) -> list[list[int]]:
    return [sorted(j + 1 for j in s) for s in sorted(sets, key=lambda s: support_sort_key(sorted(s)))]


def markov_dict(rep: MarkovReport, names=None) -> dict:
    return {
        "mu": rep.mu,
        "generators": [_bin(g, names) for g in rep.generators],
        "indispensable_binomials": [_bin(g, names) for g in rep.indispensable_binomials],
        "indispensable_monomials": [format_monomial(u, names) for u in rep.indispensable_monomials],
        "tmin": _sets(rep.tmin),
        "unique_minimal_system": rep.unique_system(),
    }


def cmd_circuits(job: JobSpec) -> dict:
    L = load_lattice(job.kind, job.source)
    A = grading_matrix(L)
    circ = enumerate_circuits(A)
    fam = support_family(circ)
    return {
        "count": len(circ),
        "circuits": [c.binomial().format() for c in circ],
        "cmin": _sets(fam.minimal),
    }


def _analysis(job: JobSpec):
    L = load_lattice(job.kind, job.source)
    return analyse(L, job.degree_bound, job.face_cap, job.limit_states)


def cmd_complex(job: JobSpec) -> dict:
    an = _analysis(job)
    g = an.gamma
    return {
        "vertices": _sets(g.vertices),
        "components": dict(sorted(g.census().items())),
        "dump": g.dump().splitlines(),
    }


def cmd_bounds(job: JobSpec) -> dict:
    return _analysis(job).report.as_dict()


def cmd_markov(job: JobSpec) -> dict:
    L = load_lattice(job.kind, job.source)
    return markov_dict(markov_basis(L, limit=job.limit_states))


def cmd_graph(job: JobSpec) -> dict:
    G = load_graph(job.source)
    sharp = condition_sharp(G)
    out: dict[str, Any] = {"vertices": G.n, "edges": G.m, "sharp": sharp}
    if not sharp:
        v = sharp_violations(G, first_only=True)
        out["sharp_violation"] = [[x + 1 for x in c] for c in v[0]] if v else []
    cws = enumerate_circuit_walks(G)
    out["circuit_walks"] = [
        {"shape": cw.shape, "edges": [e + 1 for e in cw.walk.edges], "binomial": _bin(cw.binomial)}
        for cw in cws
    ]
    rep = markov_basis(graph_lattice(G), limit=job.limit_states)
    out["markov"] = markov_dict(rep)
    out["ht"] = graph_lattice(G).rank
    by_vec = {cw.binomial.canonical().vector: cw for cw in cws}
    chords = []
    for g in rep.generators:
        cw = by_vec.get(g.canonical().vector)
        if cw is None or not is_primitive(cw.walk, G):
            continue
        cr = chord_report(cw.walk, G)
        chords.append({
            "walk": [e + 1 for e in cw.walk.edges],
            "chords": {str(e + 1): t for e, t in sorted(cr.chords.items())},
            "f4": [[e + 1 for e in f.as_tuple()] for f in cr.f4s],
        })
    out["chords"] = chords
    if sharp:
        gam = gamma_G(G, cws, job.degree_bound, job.face_cap)
        out["gamma_components"] = dict(sorted(gam.census().items()))
        t = theorem_3_14_certificate(G, rep, [cw.circuit() for cw in cws])
        out["squarefree_certificate"] = {"certified_bar": t.certified_bar,
                               "violators": [_bin(b) for b in t.violators]}
    gb = graph_bar(G, rep, cws)
    out["bar"] = {"lower": gb.lower, "upper": gb.upper, "certified": gb.certified_bar,
                  "method": gb.method, "dropped": [_bin(b) for b in gb.dropped]}
    return out


def cmd_det(job: JobSpec) -> dict:
    spec = load_det(job.source)
    names = spec.names
    orders = sample_orders(2 * spec.m, job.orders, job.seed)
    out: dict[str, Any] = {"d": list(spec.d), "m": spec.m}
    out["universal_gb"] = verify_universal_gb(spec, orders)
    out["prime"] = is_prime(spec)
    out["prime_by_saturation"] = is_prime_by_saturation(spec)
    L = lattice_of(spec)
    out["ht"] = L.rank
    rep = markov_basis(L, limit=job.limit_states)
    out["markov"] = markov_dict(rep, names)
    try:
        out["bar"] = bar_certificate(spec, limit=job.limit_states)
    except CertificationError as exc:
        out["bar"] = None
        out["bar_error"] = str(exc)
    lbi = lattice_basis_ideal(spec)
    out["lattice_basis_ideal"] = {
        "groebner": lbi.groebner_ok, "initial_ideal": lbi.initial_ok,
        "intersection": lbi.intersection_ok, "radical": lbi.radical_ok,
        "failures": lbi.failures,
    }
    lw = lawrence_ideal(spec, limit=job.limit_states)
    out["lawrence"] = {
        "b": list(lw.b), "mu": lw.markov.mu, "bar_lower": lw.bar_lower, "bar_upper": lw.bar_upper,
        "certified_bar": lw.certified_bar, "dropped": [_bin(g, names) for g in lw.dropped],
        "generators": [_bin(g, names) for g in lw.markov.generators],
    }
    ok = out["universal_gb"] and out["prime"] == out["prime_by_saturation"] and lbi.ok \
        and out["bar"] is not None
    if not ok:
        raise VerificationFailure("determinantal checks failed", out)
    return out


def cmd_verify_witness(job: JobSpec) -> dict:
    L = load_lattice(job.kind, job.source)
    A = grading_matrix(L)
    names = default_names(L.dim)
    wits = load_polynomials(job.extra["witnesses"], names)
    if job.extra.get("reference"):
        ref = load_polynomials(job.extra["reference"], names)
    else:
        ref = [g.polynomial(names) for g in markov_basis(L, limit=job.limit_states).generators]
    gamma = build_gamma(A, enumerate_circuits(A), job.degree_bound, job.face_cap)
    homog = [w.is_homogeneous(A) for w in wits]
    spans = spanning_check([gamma_of_polynomial(w, gamma) for w in wits], gamma)
    G = buchberger(wits)
    members = [radical_member(f, wits, basis=G) for f in ref]
    out = {
        "witnesses": len(wits),
        "homogeneous": homog,
        "spanning": spans,
        "radical_membership": [{"polynomial": str(f), "member": ok} for f, ok in zip(ref, members)],
        "generates_up_to_radical": all(members),
    }
    if not (all(homog) and spans and all(members)):
        raise VerificationFailure("witness verification failed", out)
    return out


COMMANDS = {
    "circuits": cmd_circuits,
    "complex": cmd_complex,
    "bounds": cmd_bounds,
    "markov": cmd_markov,
    "graph": cmd_graph,
    "det": cmd_det,
    "verify-witness": cmd_verify_witness,
}


# ---------------------------------------------------------------------------
# output


def render_text(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(isinstance(x, (int, bool)) or x is None for x in v)
    return False


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, list):
        return " ".join(_scalar(x) for x in v) if v else "(none)"
    if isinstance(v, dict):
        return "(none)"
    return str(v)


def render(obj: dict, fmt: str) -> str:
    if fmt == "machine":
        return json.dumps(obj, sort_keys=True, indent=1)
    return render_text(obj)


# ---------------------------------------------------------------------------
# entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="latbar", description="Binomial arithmetical rank of lattice ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-bound", type=int, default=None,
                        help="degree bound for face witnesses (default: twice the largest circuit half)")
    common.add_argument("--face-cap", type=int, default=4, help="largest candidate face size")
    common.add_argument("--orders", type=int, default=20, help="number of random term orders")
    common.add_argument("--seed", type=int, default=0, help="seed for random term orders")
    common.add_argument("--limit-states", type=int, default=DEFAULT_STATE_LIMIT,
                        help="fiber enumeration state limit")
    common.add_argument("--format", choices=["text", "machine"], default="text", dest="fmt")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("circuits", "complex", "bounds", "markov", "verify-witness"):
        s = sub.add_parser(name, parents=[common])
        g = s.add_mutually_exclusive_group(required=True)
        g.add_argument("--matrix", help="matrix file; the lattice is its integer kernel")
        g.add_argument("--lattice", help="matrix file whose rows span the lattice")
        if name == "verify-witness":
            s.add_argument("--witnesses", required=True, help="polynomials, one per line")
            s.add_argument("--reference", help="generating set to recover (default: Markov basis)")
    s = sub.add_parser("graph", parents=[common])
    s.add_argument("graph", help="edge list file or a name such as wheel:5")
    s = sub.add_parser("det", parents=[common])
    s.add_argument("spec", help="'m d_1 ... d_m' or a file containing it")
    return p


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    if ns.command == "graph":
        kind, source = "graph", ns.graph
    elif ns.command == "det":
        kind, source = "determinantal", ns.spec
    else:
        kind, source = ("matrix", ns.matrix) if ns.matrix else ("lattice", ns.lattice)
    extra = {}
    if ns.command == "verify-witness":
        extra = {"witnesses": ns.witnesses, "reference": ns.reference}
    if ns.face_cap < 2 or ns.orders < 0 or ns.limit_states < 1:
        raise ValueError("option out of range")
    return JobSpec(ns.command, kind, source, ns.degree_bound, ns.face_cap, ns.orders,
                   ns.seed, ns.limit_states, ns.fmt, extra)


def run(job: JobSpec) -> tuple[dict, int]:
    try:
        return COMMANDS[job.command](job), EXIT_OK
    except VerificationFailure as exc:
        return dict(exc.report, error=str(exc)), EXIT_VERIFY
    except (InconsistencyError, CertificationError) as exc:
        return {"error": str(exc)}, EXIT_VERIFY
    except (ResourceLimit, UnresolvedFaceError) as exc:
        return {"error": str(exc)}, EXIT_LIMIT
    except (OSError, ValueError, LatticeError, GraphError) as exc:
        return {"error": str(exc)}, EXIT_PARSE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        job = job_from_args(ns)
    except ValueError as exc:
        print(f"latbar: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out, code = run(job)
    if code != EXIT_OK and "error" in out:
        print(f"latbar: {out['error']}", file=sys.stderr)
        if len(out) == 1 and job.fmt == "text":
            return code
    print(render(out, job.fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
