"""Command-line interface: sidonkit <verb> ...

Exit status: 0 success, 1 a verification found a violation, 2 usage or input
error, 3 a work/search budget ran out.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .construct import (
    anticommuting_base,
    cayley_matrix,
    class_recipe,
    conjugacy_recipe,
    ef_bound,
    hamilton_lift,
    hash_code_bound,
    hash_shift_family,
    permanent_lift,
    probabilistic_sidon,
    ryser_permanent,
    sn_cross,
)
from .construct.permanent import SquareMatrix01
from .corpus import write_corpus
from .digraph import (
    best_eulerian_count,
    bidirected_kmm,
    bipartite_cayley,
    cayley_digraph,
    count_hamilton_cycles,
    degree_profile,
    enumerate_eulerian_circuits,
    find_cll,
    glm,
    glm_hamilton_formula,
    graph_girth,
    is_fk_free,
    read_digraph,
    read_edge_list,
    sigma_paths,
    transition_vectors,
    two_part_cycles,
    write_digraph,
)
from .digraph.graph import NAMED_GRAPHS
from .errors import CapExceeded, SidonkitError
from .groups import (
    ElementSet,
    FiniteGroup,
    build_group,
    conjugacy_classes,
    count_involutions,
    parse_element_set,
    read_table,
)
from .report import envelope, to_csv, to_json, to_text
from .sidon import (
    check_sk,
    check_sk_permutations,
    check_sk_prime,
    max_sk,
    max_sk_prime,
    upper_bound_report,
)


class Outcome:
    def __init__(self, report: dict, rows: list[dict] | None = None, status: int = 0, value: str | None = None):
        self.report = report
        self.rows = rows
        self.status = status
        self.value = value


# ---------------------------------------------------------------- helpers


def _group(args) -> FiniteGroup:
    return build_group(args.group, args.max_order)


def _set(G: FiniteGroup, args) -> ElementSet:
    if getattr(args, "set_file", None):
        lines = [ln.strip() for ln in Path(args.set_file).read_text().splitlines() if ln.strip()]
        return ElementSet.of(G, [G.parse_element(t) for t in lines])
    if args.set is None:
        raise SidonkitError("a set is required (--set or --set-file)")
    return parse_element_set(G, args.set)


def _elements(G: FiniteGroup, xs) -> list[dict]:
    return [{"index": x, "render": G.render(x)} for x in xs]


def _words(G: FiniteGroup, witness) -> list | None:
    if witness is None:
        return None
    if isinstance(witness[0], tuple):
        return [{"indices": list(w), "render": [G.render(a) for a in w]} for w in witness]
    return {"indices": list(witness), "render": [G.render(a) for a in witness]}


def _perm_str(p) -> str:
    return "[" + ",".join(map(str, p)) + "]"


def _base_inputs(args) -> dict:
    skip = {"func", "format", "output", "seed", "verb", "what"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


# ---------------------------------------------------------------- verbs


def cmd_group(args) -> Outcome:
    G = _group(args)
    classes = conjugacy_classes(G) if G.order <= 5040 else []
    result = {
        "label": G.label,
        "order": G.order,
        "abelian": G.is_abelian,
        "involutions": count_involutions(G),
        "classes": [{"representative": G.render(c.members[0]), "size": len(c)} for c in classes],
    }
    rows = [dict(r) for r in result["classes"]]
    if args.bounds:
        rep = upper_bound_report(G, args.k)
        result["bounds"] = [
            {"name": e.name, "value": e.value, "applicable": e.applicable, "bounds": e.bounds, "inputs": e.inputs}
            for e in rep.entries
        ]
        rows = result["bounds"]
    return Outcome(envelope("group", _base_inputs(args), result, args.seed), rows)


def cmd_verify(args) -> Outcome:
    G = _group(args)
    A = _set(G, args)
    if args.prop == "sk":
        rep = check_sk(G, A, args.k, args.max_words)
    else:
        rep = check_sk_prime(G, A, args.k, cyclic=not args.linear, max_words=args.max_words)
    holds = rep.holds if args.g is None else (rep.multiplicity is not None and rep.multiplicity <= args.g)
    result = {
        "property": rep.property,
        "k": rep.k,
        "holds": holds,
        "multiplicity": rep.multiplicity,
        "cyclic": rep.cyclic if args.prop == "sk-prime" else None,
        "members": _elements(G, A.members),
        "witness": _words(G, rep.witness),
    }
    if args.g is not None:
        result["g"] = args.g
    return Outcome(envelope("verify", _base_inputs(args), result, args.seed), None, 0 if holds else 1)


def cmd_search(args) -> Outcome:
    G = _group(args)
    if args.prop == "sk":
        exclude = (0,) if args.exclude_identity else ()
        res = max_sk(G, args.k, args.g, max_nodes=args.max_nodes, target=args.target, exclude=exclude)
    else:
        res = max_sk_prime(G, args.k, max_nodes=args.max_nodes)
    result = {
        "value": res.value,
        "exact": res.exact,
        "nodes": res.nodes,
        "witness": _elements(G, res.witness.members),
    }
    rows = [dict(r) for r in result["witness"]]
    return Outcome(envelope("search", _base_inputs(args), result, args.seed), rows, 0 if res.exact else 3)


def _pairset_outcome(args, ps, extra: dict | None = None) -> Outcome:
    G = ps.group.left
    mult = ps.multiplicity(args.max_words)
    rows = [
        {"alpha": G.render(a), "alpha_pi": G.render(b), "alpha_index": a, "alpha_pi_index": b, "claimed_g": ps.claimed_g}
        for a, b in ps.members
    ]
    result = {
        "group": ps.group.label,
        "size": len(ps),
        "claimed_g": ps.claimed_g,
        "multiplicity": mult,
        "verified": mult <= ps.claimed_g,
        "pi": G.render(ps.pi) if ps.pi is not None else None,
        "pairs": rows,
    }
    result.update(extra or {})
    return Outcome(envelope("construct", _base_inputs(args), result, args.seed), rows, 0 if mult <= ps.claimed_g else 1)


def cmd_construct(args) -> Outcome:
    what = args.what
    if what == "sn-cross":
        return _pairset_outcome(args, sn_cross(args.n, args.full, args.alternating))
    if what == "class-recipe":
        G = _group(args)
        ps = class_recipe(G, G.parse_element(args.element))
        return _pairset_outcome(args, ps, {"class_size": len(ps)})
    if what == "recipe":
        G = _group(args)
        return _pairset_outcome(args, conjugacy_recipe(G, G.parse_element(args.pi), _set(G, args)))
    if what == "permanent-lift":
        G = _group(args)
        A = _set(G, args)
        M = cayley_matrix(G, A)
        perms = permanent_lift(G, A)
        per = ryser_permanent(M)
        sk = check_sk_permutations(perms, args.k, args.max_words) if perms else None
        rowsum = len(A)
        bound = ef_bound(G.order, rowsum) if rowsum else None
        result = {
            "size": str(len(perms)),
            "ryser_permanent": str(per),
            "ef_bound": str(bound) if bound is not None else None,
            "meets_ef_bound": bound is None or per >= bound,
            "sk_holds": sk.holds if sk else True,
            "permutations": [_perm_str(p) for p in perms],
        }
        rows = [{"permutation": _perm_str(p)} for p in perms]
        ok = result["sk_holds"] and len(perms) == per
        return Outcome(envelope("construct", _base_inputs(args), result, args.seed), rows, 0 if ok else 1)
    if what == "hamilton-lift":
        g = NAMED_GRAPHS[args.named]() if args.named else read_edge_list(args.graph)
        perms = hamilton_lift(g, args.k, args.seed)
        sk = check_sk_permutations(perms, args.k, args.max_words)
        result = {
            "vertices": g.n,
            "girth": graph_girth(g),
            "size": len(perms),
            "sk_holds": sk.holds,
            "permutations": [_perm_str(p) for p in perms],
        }
        rows = [{"permutation": _perm_str(p)} for p in perms]
        return Outcome(envelope("construct", _base_inputs(args), result, args.seed), rows, 0 if sk.holds else 1)
    if what == "probabilistic":
        G = _group(args)
        base = None
        if args.kind == "first":
            base = _set(G, args) if (args.set or args.set_file) else None
        r = probabilistic_sidon(G, args.kind, base, args.seed, args.max_attempts)
        check = check_sk(G, r.members, 2) if args.kind == "first" else check_sk_prime(G, r.members, 2)
        result = {
            "size": len(r.members),
            "members": _elements(G, r.members.members),
            "k_star": r.k_star,
            "f_k_star": str(r.f_k_star),
            "target": r.target,
            "attempts": r.attempts,
            "budget_exhausted": r.budget_exhausted,
            "edge_counts_by_size": r.profile.edge_counts_by_size,
            "vertex_count": r.profile.vertex_count,
            "verified": check.holds,
        }
        rows = [dict(x) for x in result["members"]]
        status = 1 if not check.holds else (3 if r.budget_exhausted else 0)
        return Outcome(envelope("construct", _base_inputs(args), result, args.seed), rows, status)
    if what == "anticommuting-base":
        B = anticommuting_base(args.n)
        result = {"group": B.group.label, "size": len(B), "members": _elements(B.group, B.members)}
        return Outcome(envelope("construct", _base_inputs(args), result, args.seed), [dict(x) for x in result["members"]])
    if what == "hash-family":
        fam = hash_shift_family(args.t, args.v)
        rows = [{"set": " ".join(map(str, sorted(s)))} for s in fam]
        result = {"sets": [sorted(s) for s in fam], "count": len(fam)}
        return Outcome(envelope("construct", _base_inputs(args), result, args.seed), rows)
    if what == "hash-bound":
        b = hash_code_bound(args.t, args.v, args.q, args.n)
        return Outcome(envelope("construct", _base_inputs(args), {"bound": str(b)}, args.seed), None, 0, str(b))
    if what == "os-set":
        G = build_group(f"os:{args.p},{args.k}", args.max_order)
        size = (args.p - 1) // args.k
        res = max_sk(G, args.k, 1, max_nodes=args.max_nodes, target=size, exclude=(0,))
        found = res.value >= size
        result = {"group": G.label, "order": G.order, "target": size, "found": found, "nodes": res.nodes}
        status = 3
        if found:
            A = res.witness
            rep = check_sk(G, A, args.k)
            D = cayley_digraph(G, A)
            prof = degree_profile(D)
            result.update(
                members=_elements(G, A.members),
                verified=rep.holds,
                fk_free=is_fk_free(D, args.k).free,
                min_semidegree=prof.min_semidegree,
                max_out=prof.max_out,
                max_in=prof.max_in,
            )
            status = 0 if rep.holds else 1
        return Outcome(envelope("construct", _base_inputs(args), result, args.seed), None, status)
    raise SidonkitError(f"unknown construction {what}")


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(",")
        return int(a), int(b)
    except ValueError as exc:
        raise SidonkitError(f"expected two comma-separated integers, got {text!r}") from exc


def cmd_digraph(args) -> Outcome:
    if args.glm:
        D = glm(*_pair(args.glm))
    elif args.file:
        D = read_digraph(args.file)
    else:
        G = _group(args)
        D = cayley_digraph(G, _set(G, args))
    prof = degree_profile(D)
    result: dict = {
        "vertices": D.n,
        "arcs": len(D.arcs),
        "degrees": {"min_out": prof.min_out, "min_in": prof.min_in, "max_out": prof.max_out, "max_in": prof.max_in},
    }
    status = 0
    if args.fk:
        r = is_fk_free(D, args.fk)
        result["fk"] = {"k": args.fk, "free": r.free, "witness": [list(w) for w in r.witness] if r.witness else None}
        status = status or (0 if r.free else 1)
    if args.cll:
        r = find_cll(D, args.cll)
        result["cll"] = {"l": args.cll, "found": r.found, "exact": r.exact, "witness": [list(p) for p in r.witness] if r.witness else None}
        if not r.exact:
            status = 3
        elif r.found:
            status = status or 1
    if args.bipartite and not args.glm and not args.file:
        G = _group(args)
        result["bipartite_girth"] = graph_girth(bipartite_cayley(G, _set(G, args)))
    if args.write:
        write_digraph(D, args.write, args.labels)
    return Outcome(envelope("digraph", _base_inputs(args), result, args.seed), None, status)


def cmd_count(args) -> Outcome:
    what = args.what
    formula = None
    if what == "hamilton":
        if args.glm:
            l, m = _pair(args.glm)
            D = glm(l, m)
            formula = glm_hamilton_formula(l, m)
        else:
            D = read_digraph(args.file)
        value = count_hamilton_cycles(D)
    elif what == "eulerian":
        D = bidirected_kmm(args.kmm) if args.kmm else read_digraph(args.file)
        value = best_eulerian_count(D)
        if args.kmm:
            from .digraph.counting import transition_vector_formula

            formula = transition_vector_formula(args.kmm)
        if args.enumerate:
            n_enum = len(enumerate_eulerian_circuits(D))
            if n_enum != value:
                raise SidonkitError(f"enumeration gave {n_enum}, BEST gave {value}")
    elif what == "transition":
        value, vecs = transition_vectors(args.m, enumerate_all=args.list)
        formula = value
        if args.list:
            rows = [{"f": " ".join(map(str, v.f)), "g": " ".join(map(str, v.g))} for v in vecs]
            res = {"value": str(value), "enumerated": len(vecs)}
            return Outcome(envelope("count", _base_inputs(args), res, args.seed), rows, 0 if len(vecs) == value else 1, str(value))
    elif what == "formula":
        value = glm_hamilton_formula(args.r, args.m)
    elif what == "permanent":
        rows_ = [[int(x) for x in ln.split()] for ln in Path(args.matrix_file).read_text().splitlines() if ln.strip()]
        value = ryser_permanent(SquareMatrix01.from_rows(rows_))
    elif what == "sigma":
        fam = sigma_paths(args.n, args.r)
        value = fam.size
        res = {"value": str(value), "parts": [list(p) for p in fam.parts]}
        if args.check_pairs:
            members = list(fam)
            bad = 0
            for i, P in enumerate(members):
                for Q in members[i + 1 :]:
                    bad += sum(1 for c in two_part_cycles(P, Q, 2 * args.r) if c.type != 0)
            res["nonzero_type_cycles"] = bad
        return Outcome(envelope("count", _base_inputs(args), res, args.seed), None, 0, str(value))
    else:
        raise SidonkitError(f"unknown count {what}")
    res = {"value": str(value)}
    status = 0
    if formula is not None:
        res["formula"] = str(formula)
        res["matches"] = value == formula
        status = 0 if value == formula else 1
    return Outcome(envelope("count", _base_inputs(args), res, args.seed), None, status, str(value))


TABLE_BOUNDS = ["trivial", "dimovski_strict", "index2_abelian", "z2d_quotient", "order_census", "skprime_subgroup"]


def _load_corpus(directory: Path) -> list[tuple[str, FiniteGroup | None, str | None]]:
    entries = []
    for p in sorted(directory.iterdir()):
        if p.suffix == ".tbl":
            try:
                entries.append((p.name, read_table(p, label=p.stem), None))
            except SidonkitError as exc:
                entries.append((p.name, None, str(exc)))
        elif p.suffix == ".spec":
            for ln in p.read_text().splitlines():
                spec = ln.strip()
                if not spec or spec.startswith("#"):
                    continue
                try:
                    entries.append((spec, build_group(spec), None))
                except SidonkitError as exc:
                    entries.append((spec, None, str(exc)))
    return entries


def cmd_table(args) -> Outcome:
    d = Path(args.corpus)
    if args.write_corpus:
        write_corpus(d)
    if not d.is_dir():
        raise SidonkitError(f"corpus directory {d} not found")
    rows = []
    for name, G, err in _load_corpus(d):
        if G is None:
            rows.append({"group": name, "warning": err})
            continue
        res = max_sk(G, args.k, 1, max_nodes=args.max_nodes)
        rep = upper_bound_report(G, args.k)
        row = {"group": name, "order": G.order, f"M_{args.k}": res.value, "exact": res.exact, "involutions": count_involutions(G)}
        for b in TABLE_BOUNDS:
            e = rep.get(b)
            row[b] = e.value if e.applicable else None
        rows.append(row)
    rows.sort(key=lambda r: (r.get("order", 10**9), r["group"]))
    columns = ["group", "order", f"M_{args.k}", "exact", "involutions"] + TABLE_BOUNDS + ["warning"]
    report = envelope("table", _base_inputs(args), {"rows": rows}, args.seed)
    out = Outcome(report, rows)
    out.columns = columns
    return out


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=None)
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-words", type=int, default=None, help="word budget for verifiers")
    common.add_argument("--max-nodes", type=int, default=None, help="node budget for searches")
    common.add_argument("--max-order", type=int, default=20160, help="largest group order accepted")

    p = argparse.ArgumentParser(prog="sidonkit", allow_abbrev=False, description="Exact toolkit for nonabelian Sidon-type sets.")
    p.add_argument("--version", action="version", version=f"sidonkit {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    def set_args(q, required=False):
        q.add_argument("--set", help="comma-separated elements, e.g. \"(1 2 3),(1 2)\"")
        q.add_argument("--set-file", help="one element per line")

    g = sub.add_parser("group", parents=[common], allow_abbrev=False, help="describe a group")
    g.add_argument("--group", required=True)
    g.add_argument("--bounds", action="store_true")
    g.add_argument("--k", type=int, default=2)
    g.set_defaults(func=cmd_group)

    v = sub.add_parser("verify", parents=[common], allow_abbrev=False, help="check S_k / S_k[g] / S_k'")
    v.add_argument("--group", required=True)
    set_args(v)
    v.add_argument("--prop", choices=["sk", "sk-prime"], default="sk")
    v.add_argument("--k", type=int, default=2)
    v.add_argument("--g", type=int, default=None, help="accept multiplicity up to g")
    v.add_argument("--linear", action="store_true", help="S_k' without the cyclic closing condition")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], allow_abbrev=False, help="maximum S_k[g] or S_k' set")
    s.add_argument("--group", required=True)
    s.add_argument("--prop", choices=["sk", "sk-prime"], default="sk")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--g", type=int, default=1)
    s.add_argument("--target", type=int, default=None)
    s.add_argument("--exclude-identity", action="store_true")
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("construct", help="run a construction", allow_abbrev=False)
    csub = c.add_subparsers(dest="what", required=True)
    x = csub.add_parser("sn-cross", parents=[common], allow_abbrev=False)
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--full", action="store_true")
    x.add_argument("--alternating", action="store_true")
    x = csub.add_parser("class-recipe", parents=[common], allow_abbrev=False)
    x.add_argument("--group", required=True)
    x.add_argument("--element", required=True)
    x = csub.add_parser("recipe", parents=[common], allow_abbrev=False)
    x.add_argument("--group", required=True)
    x.add_argument("--pi", required=True)
    set_args(x)
    x = csub.add_parser("permanent-lift", parents=[common], allow_abbrev=False)
    x.add_argument("--group", required=True)
    x.add_argument("--k", type=int, default=2)
    set_args(x)
    x = csub.add_parser("hamilton-lift", parents=[common], allow_abbrev=False)
    src = x.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="edge list file, 'u v' per line, 1-indexed")
    src.add_argument("--named", choices=sorted(NAMED_GRAPHS))
    x.add_argument("--k", type=int, default=2)
    x = csub.add_parser("probabilistic", parents=[common], allow_abbrev=False)
    x.add_argument("--group", required=True)
    x.add_argument("--kind", choices=["first", "second"], required=True)
    x.add_argument("--max-attempts", type=int, default=200)
    set_args(x)
    x = csub.add_parser("anticommuting-base", parents=[common], allow_abbrev=False)
    x.add_argument("--n", type=int, required=True)
    x = csub.add_parser("hash-family", parents=[common], allow_abbrev=False)
    x.add_argument("--t", type=int, required=True)
    x.add_argument("--v", type=int, required=True)
    x = csub.add_parser("hash-bound", parents=[common], allow_abbrev=False)
    for name in ("t", "v", "q", "n"):
        x.add_argument(f"--{name}", type=int, required=True)
    x = csub.add_parser("os-set", parents=[common], allow_abbrev=False)
    x.add_argument("--p", type=int, required=True)
    x.add_argument("--k", type=int, default=2)
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("digraph", parents=[common], allow_abbrev=False, help="build and inspect a digraph")
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--glm", help="l,m")
    src.add_argument("--file")
    src.add_argument("--group", help="Cayley digraph of --set in this group")
    set_args(d)
    d.add_argument("--fk", type=int, default=None)
    d.add_argument("--cll", type=int, default=None)
    d.add_argument("--bipartite", action="store_true", help="also report the bipartite Cayley girth")
    d.add_argument("--write")
    d.add_argument("--labels")
    d.set_defaults(func=cmd_digraph)

    n = sub.add_parser("count", help="exact counts", allow_abbrev=False)
    nsub = n.add_subparsers(dest="what", required=True)
    x = nsub.add_parser("hamilton", parents=[common], allow_abbrev=False)
    src = x.add_mutually_exclusive_group(required=True)
    src.add_argument("--glm", help="l,m")
    src.add_argument("--file")
    x = nsub.add_parser("eulerian", parents=[common], allow_abbrev=False)
    src = x.add_mutually_exclusive_group(required=True)
    src.add_argument("--kmm", type=int)
    src.add_argument("--file")
    x.add_argument("--enumerate", action="store_true", help="cross-check by listing circuits")
    x = nsub.add_parser("transition", parents=[common], allow_abbrev=False)
    x.add_argument("--m", type=int, required=True)
    x.add_argument("--list", action="store_true")
    x = nsub.add_parser("formula", parents=[common], allow_abbrev=False)
    x.add_argument("--r", type=int, required=True)
    x.add_argument("--m", type=int, required=True)
    x = nsub.add_parser("permanent", parents=[common], allow_abbrev=False)
    x.add_argument("--matrix-file", required=True)
    x = nsub.add_parser("sigma", parents=[common], allow_abbrev=False)
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--r", type=int, required=True)
    x.add_argument("--check-pairs", action="store_true")
    n.set_defaults(func=cmd_count)

    t = sub.add_parser("table", parents=[common], allow_abbrev=False, help="M_k and bounds across a corpus")
    t.add_argument("--corpus", required=True, help="directory of .tbl table files and .spec files")
    t.add_argument("--k", type=int, default=2)
    t.add_argument("--write-corpus", action="store_true", help="first write the groups of order <= 16 there")
    t.set_defaults(func=cmd_table)
    return p


DEFAULT_FORMAT = {"count": "text", "table": "csv"}


def render(args, out: Outcome) -> str:
    fmt = args.format or DEFAULT_FORMAT.get(args.verb, "json")
    if fmt == "json":
        return to_json(out.report)
    if fmt == "csv":
        if out.rows is not None:
            return to_csv(out.rows, getattr(out, "columns", None))
        from .report import flatten

        return to_csv([{"key": k, "value": v} for k, v in flatten(out.report)], ["key", "value"])
    if out.value is not None:
        return out.value + "\n"
    return to_text(out.report)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except CapExceeded as exc:
        print(f"sidonkit: budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (SidonkitError, ValueError, OSError) as exc:
        print(f"sidonkit: error: {exc}", file=sys.stderr)
        return 2
    text = render(args, out)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
