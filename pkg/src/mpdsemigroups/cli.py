"""Command-line interface: ``mpdsemigroups <command> --gens '[[..],..]' [options]``.

Exit status is 0 for certified results, 2 for truncated or uncertified ones (the
result is still printed), and 1 for errors.
"""

import argparse
import json
import os
import sys

from . import catalog
from .classify import classify_symmetry, quasi_frobenius, wilf_check
from .core import AffineSemigroup
from .errors import ParseError, SemigroupError
from .gaps import CERTIFIED, frobenius_element, gaps, pseudo_frobenius
from .gluing import find_gluings, pf_of_gluing, rf_generation_transfer, rf_of_gluing, verify_gluing
from .orders import TermOrder
from .resolution import STRATEGIES, TRUNCATED_SERIES, betti_table, k_polynomial
from .rf import generated_by_rf, rf_determinant, rf_matrices, rf_matrix, rf_relations
from .toric import is_generic, minimal_generators, toric_groebner

BOX = "box"


def _json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: {exc}") from None


def _vector(text, what="vector"):
    text = text.strip()
    if text.startswith("["):
        return tuple(_json_arg(text, what))
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"{what}: expected comma-separated integers, got {text!r}") from None


def load_semigroup(args):
    if args.example:
        return catalog.example(args.example)
    if args.gens:
        gens = _json_arg(args.gens, "--gens")
    elif args.file:
        with open(args.file) as fh:
            gens = _json_arg(fh.read(), args.file)
        if isinstance(gens, dict):
            gens = gens.get("generators")
    else:
        raise ParseError("give --gens, --example or an input file")
    if not isinstance(gens, list):
        raise ParseError("generators must be a JSON list of integer vectors")
    return AffineSemigroup(gens)


def _order(args, required=False):
    if args.order is None:
        if required:
            raise ParseError("this command needs --order")
        return TermOrder("grevlex")
    if args.order.startswith("{"):
        return TermOrder.from_json(_json_arg(args.order, "--order"))
    return TermOrder(args.order)


def _bound(args, S):
    if args.bound is not None:
        return _vector(args.bound, "--bound")
    if args.bound_scale is not None:
        return tuple(args.bound_scale * x for x in S.generator_sum)
    return None


def _status_code(status):
    return 0 if status == CERTIFIED or status == BOX else 2


def _vec_list(vs):
    return [list(v) for v in vs]


# commands return (json-able payload, text rendering, status)


def cmd_gaps(S, args):
    H = gaps(S, _bound(args, S))
    text = "\n".join(str(h) for h in H.elements) + f"\nstatus: {H.status}"
    return H.to_json(), text.lstrip(), H.status


def cmd_pf(S, args):
    bound = _vector(args.bound, "--bound") if args.bound else None
    pf = pseudo_frobenius(S, bound, args.bound_scale or 2)
    out = {"pf": _vec_list(pf.elements), "status": pf.status}
    if not pf.certified and pf.bound is not None:
        out["bound"] = list(pf.bound)
    text = "\n".join(str(f) for f in pf.elements) + f"\nstatus: {pf.status}"
    return out, text.lstrip(), pf.status


def cmd_frobenius(S, args):
    res = frobenius_element(S, _order(args, required=True), _bound(args, S))
    return res.to_json(), f"{res.element}\nstatus: {res.status}", res.status


def cmd_betti(S, args):
    table = betti_table(S, _bound(args, S))
    rows = [{"degree": list(b), "betti": list(v)} for b, v in table.degrees.items()]
    out = {"totals": list(table.totals()), "degrees": rows, "box": list(table.box), "status": BOX}
    lines = ["totals: " + " ".join(map(str, table.totals()))]
    for i in range(1, S.n):
        supp = table.support(i)
        if supp:
            lines.append(f"beta_{i}: " + ", ".join(f"{b}^{table.degrees[b][i]}" for b in supp))
    return out, "\n".join(lines), BOX


def cmd_kpoly(S, args):
    K = k_polynomial(S, args.strategy)
    return {"k": K.to_json(), "strategy": args.strategy, "status": CERTIFIED}, K.render(), CERTIFIED


def cmd_ideal(S, args):
    order = _order(args)
    gens = toric_groebner(S, order) if args.groebner else minimal_generators(S, order)
    out = {"binomials": [g.to_json() for g in gens], "order": order.to_json(), "status": CERTIFIED}
    return out, "\n".join(g.render() for g in gens), CERTIFIED


def cmd_generic(S, args):
    v = is_generic(S, _order(args))
    bad = [{"binomial": g.to_json(), "reason": r} for g, r in v.violations]
    text = f"generic: {v.value}" + "".join(f"\n  {g.render()}: {r}" for g, r in v.violations)
    return {"generic": v.value, "violations": bad, "status": CERTIFIED}, text, CERTIFIED


def _pf_targets(S, args):
    if args.pf:
        return [_vector(args.pf, "--pf")]
    pf = pseudo_frobenius(S)
    return list(pf.elements)


def cmd_rf(S, args):
    out, text = [], []
    for f in _pf_targets(S, args):
        mats = rf_matrices(S, f) if args.all else [rf_matrix(S, f)]
        for M in mats:
            item = M.to_json()
            item["det"] = rf_determinant(M, S)
            out.append(item)
            text.append(f"RF{f}:\n{M.render()}")
    return {"matrices": out, "status": CERTIFIED}, "\n\n".join(text), CERTIFIED


def cmd_rfrel(S, args):
    order = _order(args)
    if args.check:
        res = generated_by_rf(S, order)
        out = {
            "generated": res.value,
            "unreached": [g.to_json() for g in res.unreached],
            "status": CERTIFIED,
        }
        text = f"generated by RF-relations: {res.value}"
        return out, text, CERTIFIED
    rels, text = [], []
    for f in _pf_targets(S, args):
        for r in rf_relations(S, f, order):
            rels.append(r.to_json())
            mark = " (tight)" if r.tight else ""
            text.append(f"{f} [{r.i + 1},{r.j + 1}] {r.binomial.render()}  deg {r.degree}{mark}")
    return {"relations": rels, "status": CERTIFIED}, "\n".join(text), CERTIFIED


def _partition(text):
    try:
        left, right = text.split("|")
        return tuple(tuple(int(x) for x in part.split(",") if x.strip()) for part in (left, right))
    except ValueError:
        raise ParseError(f"--partition: expected 'i,j,..|k,l,..', got {text!r}") from None


def _decomposition(S, args):
    if args.partition is None or args.d is None:
        found = find_gluings(S)
        if not found:
            raise ParseError("no gluing found; give --partition and --d")
        return found[0]
    res = verify_gluing(S, _partition(args.partition), _vector(args.d, "--d"))
    if not res.value:
        raise ParseError(f"not a gluing: {res.reason}")
    return res.decomposition


def cmd_glue(S, args):
    action = args.action
    if action == "verify":
        if args.partition is None or args.d is None:
            raise ParseError("glue verify needs --partition and --d")
        res = verify_gluing(S, _partition(args.partition), _vector(args.d, "--d"))
        out = {"gluing": res.value, "reason": res.reason, "intersection": _vec_list(res.intersection)}
        return out, f"gluing: {res.value} ({res.reason})", CERTIFIED
    if action == "find":
        decs = find_gluings(S)
        out = {"gluings": [d.to_json() for d in decs], "status": CERTIFIED}
        text = "\n".join(f"{list(d.partition[0])} | {list(d.partition[1])}  d = {d.glue_element}" for d in decs)
        return out, text or "no gluings", CERTIFIED
    dec = _decomposition(S, args)
    if action == "pf":
        pf = pf_of_gluing(dec)
        return pf.to_json(), "\n".join(str(f) for f in pf.elements), pf.status
    if action == "rf":
        if not args.f or not args.g:
            raise ParseError("glue rf needs --f and --g")
        choices = _json_arg(args.choices, "--choices") if args.choices else None
        M = rf_of_gluing(dec, _vector(args.f, "--f"), _vector(args.g, "--g"), choices)
        return M.to_json(), M.render(), CERTIFIED
    if action == "transfer":
        res = rf_generation_transfer(dec)
        ws = [
            {
                "f": list(w.f), "g": list(w.g),
                "f_plus_d": list(w.f_plus_d), "g_plus_d": list(w.g_plus_d),
                "row_f": list(w.row_f), "row_g": list(w.row_g),
                "relation": w.relation.to_json(),
            }
            for w in res.witnesses
        ]
        out = {"value": res.value, "reason": res.reason, "witnesses": ws, "glued_generated": res.glued_generated}
        text = f"transfer: {res.value}" + "".join(
            f"\n  rows {w.row_f} / {w.row_g}: {w.relation.render()}" for w in res.witnesses
        )
        return out, text, CERTIFIED
    raise ParseError(f"unknown glue action {action!r}")


def cmd_classify(S, args):
    r = classify_symmetry(S, _order(args, required=True), _bound(args, S))
    return r.to_json(), f"{r.classification}, F = {r.frobenius}, PF = {list(r.pf)}", CERTIFIED


def cmd_wilf(S, args):
    r = wilf_check(S, _order(args, required=True), _bound(args, S))
    text = f"N = {r.N}, sporadic*e = {r.lhs}, holds: {r.holds}"
    return r.to_json(), text, CERTIFIED


def cmd_qf(S, args):
    q = quasi_frobenius(S, _bound(args, S))
    return q.to_json(), "\n".join(str(x) for x in q.elements), q.status


COMMANDS = {
    "gaps": cmd_gaps,
    "pf": cmd_pf,
    "frobenius": cmd_frobenius,
    "betti": cmd_betti,
    "kpoly": cmd_kpoly,
    "ideal": cmd_ideal,
    "generic": cmd_generic,
    "rf": cmd_rf,
    "rfrel": cmd_rfrel,
    "glue": cmd_glue,
    "classify": cmd_classify,
    "wilf": cmd_wilf,
    "qf": cmd_qf,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gens", help="inline generators, e.g. '[[2,11],[3,0]]'")
    common.add_argument("--example", choices=sorted(catalog.EXAMPLES), help="a built-in example")
    common.add_argument("--order", help="lex, grlex, grevlex, or a JSON term order")
    common.add_argument("--bound", help="componentwise box, e.g. 40,40")
    common.add_argument("--bound-scale", type=int, help="box = k times the generator sum")
    common.add_argument("--format", choices=("json", "text", "matrix"), default="json")
    common.add_argument("--threads", type=int, help="thread count for numerical kernels")

    p = argparse.ArgumentParser(prog="mpdsemigroups", description="Affine semigroup invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name):
        sp = sub.add_parser(name, parents=[common])
        if name == "glue":
            sp.add_argument("action", choices=("verify", "find", "pf", "rf", "transfer"))
        sp.add_argument("file", nargs="?", help="JSON file: a generator list or {\"generators\": [...]}")
        return sp

    for name in ("gaps", "pf", "frobenius", "betti", "generic", "classify", "wilf", "qf"):
        add(name)
    sp = add("kpoly")
    sp.add_argument("--strategy", choices=STRATEGIES, default=TRUNCATED_SERIES)
    sp = add("ideal")
    sp.add_argument("--groebner", action="store_true", help="reduced Gröbner basis instead")
    sp = add("rf")
    sp.add_argument("--pf", help="pseudo-Frobenius element (default: all)")
    sp.add_argument("--all", action="store_true", help="every RF-matrix, not only the first")
    sp = add("rfrel")
    sp.add_argument("--pf", help="pseudo-Frobenius element (default: all)")
    sp.add_argument("--check", action="store_true", help="test whether RF-relations generate the ideal")
    sp = add("glue")
    sp.add_argument("--partition", help="e.g. '0,1,2,3|4,5' (0-based)")
    sp.add_argument("--d", help="glue element")
    sp.add_argument("--f")
    sp.add_argument("--g")
    sp.add_argument("--choices", help="JSON row choices for glue rf")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS"):
            os.environ.setdefault(var, str(args.threads))
    try:
        S = load_semigroup(args)
        payload, text, status = COMMANDS[args.command](S, args)
    except (SemigroupError, KeyError, OSError) as exc:
        code = getattr(exc, "code", type(exc).__name__)
        msg = exc.args[0] if exc.args else str(exc)
        print(json.dumps({"error": code, "message": str(msg)}), file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)
    return _status_code(status)


if __name__ == "__main__":
    sys.exit(main())
