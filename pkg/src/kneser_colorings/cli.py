"""Command-line entry point.

Exit codes: 0 success, 1 verification failure (witnesses in the JSON
output), 2 parameter-domain or usage errors.  Certificates are JSON,
bounds tables CSV, graph exports DOT or JSON.  All randomized searches
take --seed and are deterministic for a fixed seed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import achromatic, bounds as bounds_mod, designs, geometry, oracle as oracle_mod
from . import pseudoachromatic as pseudo
from .colorings import Coloring, check_condition_C, coloring_from_json, verify_coloring
from .errors import (CertificateError, CoverageError, ParameterDomainError,
                     SearchExhaustedError, ShapeError, SizeCapError)
from .kneser import build_kneser
from .pseudoachromatic import MatchingGraph


def _add_common(p):
    p.add_argument("--out", help="write the primary output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("KNESERC_THREADS", "1")),
                   help="worker threads (reserved; all searches here run single-threaded)")


def parse_invocation(argv):
    ap = argparse.ArgumentParser(prog="kneserc",
                                 description="Complete colorings of Kneser graphs: "
                                             "constructions, certificates, bounds, oracles.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a certified coloring")
    c.add_argument("--family", required=True,
                   choices=["kn2-achromatic", "kn2-psi-lower", "kn2-psi-tight", "matching"])
    c.add_argument("--n", type=int, help="n for the K(n,2) families")
    c.add_argument("--m", type=int, help="matching size for --family matching")
    c.add_argument("--grundy", action="store_true",
                   help="apply the size-ordered Grundy relabeling (kn2-achromatic only)")
    _add_common(c)

    v = sub.add_parser("verify", help="verify a coloring certificate file")
    v.add_argument("--coloring", required=True)
    v.add_argument("--graph", choices=["kneser", "dv", "matching"],
                   help="cross-check the certificate's graph kind")
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--checks", default="proper,complete",
                   help="comma list from proper,complete,grundy,dominating,condition-c")
    _add_common(v)

    b = sub.add_parser("bounds", help="CSV table of all bound formulas")
    b.add_argument("--n-max", type=int, required=True)
    b.add_argument("--k-max", type=int, default=2)
    _add_common(b)

    o = sub.add_parser("oracle", help="exact exponential-time parameters on K(n,k)")
    o.add_argument("--param", required=True, choices=["alpha", "psi", "grundy", "chi"])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--cap", type=int, help="vertex cap override")
    _add_common(o)

    d = sub.add_parser("design", help="construct or check block designs")
    d.add_argument("--type", choices=["sts", "kts", "21-5-1", "1f", "1f-c4free"])
    d.add_argument("--n", type=int, help="points for sts/kts")
    d.add_argument("--order", type=int, help="order for 1-factorizations")
    d.add_argument("--check", help="verify a design JSON file instead of constructing")
    _add_common(d)

    g = sub.add_parser("geom", help="geometric disjointness graphs")
    g.add_argument("--op", required=True,
                   choices=["dv-coloring", "thrackle", "dvnk", "triangle-pairs"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, help="subset size for dvnk")
    g.add_argument("--layout", choices=["convex", "random", "random-convex"],
                   default="convex")
    _add_common(g)

    e = sub.add_parser("export", help="export K(n,k) as DOT or JSON")
    e.add_argument("--format", required=True, choices=["dot", "json"])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    _add_common(e)

    return ap.parse_args(argv)


def _emit(plan, text: str) -> None:
    if plan.out:
        with open(plan.out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _cmd_construct(plan) -> int:
    fam = plan.family
    if fam == "matching":
        if plan.m is None:
            raise ParameterDomainError("--family matching needs --m")
        coloring = pseudo.matching_coloring(plan.m)
    else:
        if plan.n is None:
            raise ParameterDomainError(f"--family {fam} needs --n")
        if fam == "kn2-achromatic":
            coloring = achromatic.achromatic_coloring(plan.n)
            if plan.grundy:
                coloring = achromatic.grundy_relabel(coloring)
        elif fam == "kn2-psi-lower":
            coloring = pseudo.psi_lower_coloring(plan.n, seed=plan.seed)
        else:
            coloring = pseudo.psi_tight_coloring(plan.n)
    _emit(plan, coloring.to_json())
    return 0


def _graph_for(coloring: Coloring):
    kind = coloring.graph_id[0]
    if kind == "kneser":
        return build_kneser(coloring.graph_id[1], coloring.graph_id[2])
    if kind == "dv":
        ps = geometry.PointSet(coloring.graph_id[1])
        return geometry.build_dv(ps, coloring.graph_id[2])
    return MatchingGraph(coloring.graph_id[1])


def _cmd_verify(plan) -> int:
    with open(plan.coloring) as fh:
        coloring = coloring_from_json(fh.read())
    kind = coloring.graph_id[0]
    if plan.graph and plan.graph != kind:
        raise ParameterDomainError(f"certificate is for a {kind} graph, not {plan.graph}")
    if kind == "kneser":
        if plan.n is not None and plan.n != coloring.graph_id[1]:
            raise ParameterDomainError(f"certificate has n={coloring.graph_id[1]}, not {plan.n}")
        if plan.k is not None and plan.k != coloring.graph_id[2]:
            raise ParameterDomainError(f"certificate has k={coloring.graph_id[2]}, not {plan.k}")
    wanted = [c.strip() for c in plan.checks.split(",") if c.strip()]
    cond_c = "condition-c" in wanted
    wanted = [c for c in wanted if c != "condition-c"]
    g = _graph_for(coloring)
    rep = verify_coloring(g, coloring, checks=set(wanted) or {"proper", "complete"})
    doc = rep.as_dict()
    ok = all(doc[c] for c in wanted)
    if cond_c:
        cc = check_condition_C(coloring)
        doc["condition_c"] = cc.as_dict()
        ok = ok and cc.passes
    _emit(plan, json.dumps(doc, sort_keys=True))
    return 0 if ok else 1


def _cmd_bounds(plan) -> int:
    rows = bounds_mod.bounds_table(plan.n_max, plan.k_max)
    _emit(plan, bounds_mod.bounds_csv(rows))
    return 0


def _cmd_oracle(plan) -> int:
    g = build_kneser(plan.n, plan.k)
    fn = {"alpha": oracle_mod.exact_achromatic, "psi": oracle_mod.exact_pseudoachromatic,
          "grundy": oracle_mod.exact_grundy, "chi": oracle_mod.exact_chromatic}[plan.param]
    res = fn(g, plan.cap) if plan.cap else fn(g)
    doc = res.as_dict()
    doc.update({"n": plan.n, "k": plan.k})
    _emit(plan, json.dumps(doc, sort_keys=True))
    return 0


def _design_doc(design: designs.Design, classes=None):
    doc = {"n": design.n, "blocks": [list(b) for b in design.blocks]}
    if classes is not None:
        doc["classes"] = [list(c) for c in classes]
    return doc


def _cmd_design(plan) -> int:
    if plan.check:
        with open(plan.check) as fh:
            doc = json.load(fh)
        blocks = tuple(sorted(tuple(sorted(b)) for b in doc["blocks"]))
        n = int(doc["n"])
        k = len(blocks[0]) if blocks else 0
        b = len(blocks)
        r = b * k // n if n else 0
        lam = r * (k - 1) // (n - 1) if n > 1 else 0
        rep = designs.verify_design(designs.Design(n=n, blocks=blocks, k=k, r=r, lam=lam))
        _emit(plan, json.dumps(rep.as_dict(), sort_keys=True))
        return 0 if rep.passed else 1
    if plan.type is None:
        raise ParameterDomainError("design needs --type or --check")
    if plan.type == "sts":
        if plan.n is None:
            raise ParameterDomainError("design --type sts needs --n")
        doc = _design_doc(designs.construct_sts(plan.n))
    elif plan.type == "kts":
        if plan.n is None:
            raise ParameterDomainError("design --type kts needs --n")
        res = designs.construct_kts(plan.n)
        doc = _design_doc(res.design, classes=res.classes)
    elif plan.type == "21-5-1":
        doc = _design_doc(designs.construct_design_21_5_1())
    else:
        if plan.order is None:
            raise ParameterDomainError("1-factorization needs --order")
        if plan.type == "1f":
            of = designs.construct_one_factorization(plan.order)
        else:
            of = designs.c4_free_one_factorization(plan.order, seed=plan.seed)
        doc = {"order": of.order,
               "factors": [[list(e) for e in fac] for fac in of.factors]}
    _emit(plan, json.dumps(doc, sort_keys=True))
    return 0


def _cmd_geom(plan) -> int:
    n = plan.n
    if plan.layout == "convex":
        ps = geometry.convex_position_points(n)
    elif plan.layout == "random":
        ps = geometry.random_general_position(n, seed=plan.seed)
    else:
        ps = geometry.random_convex_position(n, seed=plan.seed)
    if plan.op == "dv-coloring":
        _emit(plan, geometry.dv_achromatic_coloring(ps).to_json())
        return 0
    if plan.op == "thrackle":
        val = geometry.thrackle_max_edges(ps)
        _emit(plan, json.dumps({"n": n, "layout": plan.layout, "thrackle_max_edges": val},
                               sort_keys=True))
        return 0
    if plan.op == "dvnk":
        if plan.k is None:
            raise ParameterDomainError("geom --op dvnk needs --k")
        _emit(plan, geometry.dvnk_lower_coloring(ps, plan.k).to_json())
        return 0
    rep = geometry.triangle_pair_check(ps)
    _emit(plan, json.dumps(rep.as_dict(), sort_keys=True))
    return 0 if rep.passes else 1


def _cmd_export(plan) -> int:
    g = build_kneser(plan.n, plan.k)
    _emit(plan, g.to_dot() if plan.format == "dot" else g.vertices_json())
    return 0


_DISPATCH = {"construct": _cmd_construct, "verify": _cmd_verify, "bounds": _cmd_bounds,
             "oracle": _cmd_oracle, "design": _cmd_design, "geom": _cmd_geom,
             "export": _cmd_export}


def execute(plan) -> int:
    if getattr(plan, "threads", 1) < 1:
        raise ParameterDomainError("--threads must be >= 1")
    return _DISPATCH[plan.command](plan)


def main(argv=None) -> int:
    try:
        plan = parse_invocation(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return 2 if exc.code not in (0, None) else 0
    try:
        return execute(plan)
    except (ParameterDomainError, SizeCapError, ShapeError, CoverageError,
            FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2
    except (CertificateError, SearchExhaustedError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
