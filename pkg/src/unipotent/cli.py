"""Command line front end.

Subcommands mirror the library: ``richardson``, ``regular``, ``poset``,
``distinguished``, ``bala-carter {label,enumerate,image}``, ``verify`` and
``selfcheck``.  Output is JSON by default (DOT and text where noted), and
identical inputs with the same seed produce byte-identical output.  Exit
status: 0 success, 2 domain error, 3 unsupported regime, 4 verification
failure.  ``UA_SEED`` supplies the seed when no flag is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import selfcheck as selfcheck_mod
from .balacarter import bc_enumerate, bc_image, bc_label, BCPair, \
    distinguished_partitions, enumerate_distinguished_parabolics
from .catalog import closure_poset, poset_to_dot, poset_to_json
from .groups import (
    GL, GOOD, O_EVEN, SO_EVEN, SO_ODD, SP, TWO,
    DomainError, GroupSpec, UnsupportedRegimeError, parse_levi,
)
from .partitions import dual, format_partition, parse_partition
from .ffgroups import form_space, verify_richardson
from .richardson import regular_partition, richardson_partition
from .rootsystems import (
    levi_partition, parse_nodes, root_system, rootsystem_for,
    EXCEPTIONAL_RANKS,
)

_GROUP_FAMILIES = {"gl": GL, "so-odd": SO_ODD, "so-even": SO_EVEN,
                   "sp": SP, "o-even": O_EVEN}
_LETTER_FAMILIES = {"a": GL, "b": SO_ODD, "c": SP, "d": SO_EVEN}


class _VerificationFailure(Exception):
    pass


def _emit_error(kind: str, detail: str) -> None:
    print(json.dumps({"error": kind, "detail": detail}), file=sys.stderr)


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    return int(os.environ.get("UA_SEED", "0"))


def _group(args, default_char: str | None = None) -> GroupSpec:
    char = getattr(args, "char", None) or default_char or GOOD
    family = _GROUP_FAMILIES.get(args.family)
    if family is None:
        raise DomainError(f"unknown group family {args.family!r}")
    return GroupSpec(family, args.rank, char)


def _levi_for(args, g: GroupSpec):
    """Resolve the input selector: an explicit Levi shape or a node subset."""
    has_levi = getattr(args, "levi", None) is not None
    has_nodes = getattr(args, "nodes", None) is not None
    if has_levi == has_nodes:
        raise DomainError("give exactly one of --levi and --nodes")
    if has_levi:
        return parse_levi(args.levi)
    return levi_partition(rootsystem_for(g), parse_nodes(args.nodes))


def _cmd_richardson(args) -> dict:
    g = _group(args)
    lv = _levi_for(args, g)
    rich = richardson_partition(g, lv)
    return {
        "levi": {"gl": list(lv.gl_parts), "cl": lv.cl_rank},
        "psi": list(dual(rich)),
        "richardson": list(rich),
    }


def _cmd_regular(args) -> dict:
    g = _group(args)
    return {
        "family": args.family,
        "rank": g.rank,
        "char": g.char,
        "regular": [list(p) for p in regular_partition(g)],
    }


def _cmd_poset(args):
    g = _group(args)
    poset = closure_poset(g)
    if args.format == "dot":
        return poset_to_dot(poset)
    doc = poset_to_json(poset)
    if args.format == "text":
        lines = [f"{n['partition']} (dim {n['dim']})" for n in doc["nodes"]]
        lines += [f"{lo} < {hi}" for lo, hi in doc["covers"]]
        return "\n".join(lines) + "\n"
    return doc


def _resolve_system(args):
    fam = args.family.lower()
    if fam in {k.lower() for k in EXCEPTIONAL_RANKS}:
        letter = fam.upper()
        return root_system(letter, EXCEPTIONAL_RANKS[letter]), None
    if args.rank is None:
        raise DomainError("classical families need --rank")
    if fam in _LETTER_FAMILIES:
        group_family = _LETTER_FAMILIES[fam]
        rank = args.rank + 1 if group_family == GL else args.rank
        return rootsystem_for(GroupSpec(group_family, rank)), group_family
    if fam in _GROUP_FAMILIES:
        group_family = _GROUP_FAMILIES[fam]
        return rootsystem_for(GroupSpec(group_family, args.rank)), group_family
    raise DomainError(f"unknown family {args.family!r}")


def _cmd_distinguished(args) -> dict:
    rs, group_family = _resolve_system(args)
    doc = {
        "family": args.family,
        "rank": rs.rank,
        "parabolics": [sorted(J) for J in enumerate_distinguished_parabolics(rs)],
    }
    if group_family is not None and group_family != O_EVEN:
        group_rank = rs.rank + 1 if group_family == GL else rs.rank
        doc["partitions"] = {
            ch: [list(p) for p in
                 distinguished_partitions(GroupSpec(group_family, group_rank, ch))]
            for ch in (GOOD, TWO)
        }
    return doc


def _pair_doc(pair: BCPair) -> dict:
    return {"gl": list(pair.gl_factors), "dist": list(pair.dist)}


def _cmd_bala_carter(args) -> dict:
    g = _group(args)
    if args.action == "label":
        p = parse_partition(args.partition)
        pair = bc_label(g, p)
        return {"partition": list(p), "pair": _pair_doc(pair)}
    if args.action == "image":
        pair = BCPair(parse_partition(args.gl), parse_partition(args.dist))
        return {"pair": _pair_doc(pair), "partition": list(bc_image(g, pair))}
    pairs = bc_enumerate(g)
    return {
        "family": args.family,
        "rank": g.rank,
        "count": len(pairs),
        "pairs": [_pair_doc(p) for p in pairs],
    }


def _cmd_verify(args) -> dict:
    char = TWO if args.q % 2 == 0 else GOOD
    g = _group(args, default_char=char)
    if g.char != char:
        raise DomainError(f"q = {args.q} lives in characteristic class {char!r}")
    lv = _levi_for(args, g)
    predicted = richardson_partition(g, lv)
    fs = form_space(g.family, g.rank, args.q)
    report = verify_richardson(
        fs, lv, predicted, budget=args.budget, sample=args.sample, seed=_seed(args))
    doc = {
        "family": args.family,
        "rank": g.rank,
        "char": g.char,
        "q": args.q,
        "levi": {"gl": list(lv.gl_parts), "cl": lv.cl_rank},
        "predicted": list(predicted),
        "all_le": report.all_le,
        "attained": report.attained,
        "attained_count": report.attained_count,
        "total": report.total,
        "dim_Q": report.dim_q,
        "mode": "sample" if args.sample is not None else "exhaustive",
        "seed": _seed(args),
    }
    if not report.passed:
        raise _VerificationFailure(json.dumps(doc))
    return doc


def _cmd_selfcheck(args):
    only = None
    if args.only:
        only = {int(tok) for tok in args.only.split(",")}
    results = []
    for crit, ok, detail, secs in selfcheck_mod.run_all(only=only):
        results.append({
            "criterion": crit.number,
            "name": crit.name,
            "pass": ok,
            "seconds": round(secs, 3),
            "detail": detail,
        })
    passed = all(r["pass"] for r in results)
    if args.format == "json":
        doc = {"passed": passed, "results": results}
        if not passed:
            raise _VerificationFailure(json.dumps(doc))
        return doc
    lines = [
        f"{'PASS' if r['pass'] else 'FAIL'} {r['criterion']:2d} "
        f"{r['name']} [{r['seconds']:.2f}s] {r['detail']}"
        for r in results
    ]
    text = "\n".join(lines) + "\n"
    if not passed:
        raise _VerificationFailure(text)
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uniclass",
        description="Unipotent class computations for classical groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_flags(p, chars=True):
        p.add_argument("--family", required=True,
                       help="gl | so-odd | so-even | sp | o-even")
        p.add_argument("--rank", type=int, required=True)
        if chars:
            p.add_argument("--char", choices=[GOOD, TWO], default=GOOD)

    p = sub.add_parser("richardson", help="Jordan type of a Richardson class")
    add_group_flags(p)
    p.add_argument("--levi", help='Levi shape, e.g. "2,1+0"')
    p.add_argument("--nodes", help='node subset, e.g. "1,3"; empty for Borel')
    p.set_defaults(fn=_cmd_richardson)

    p = sub.add_parser("regular", help="regular unipotent Jordan types")
    add_group_flags(p)
    p.set_defaults(fn=_cmd_regular)

    p = sub.add_parser("poset", help="closure order of unipotent classes")
    add_group_flags(p)
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.set_defaults(fn=_cmd_poset)

    p = sub.add_parser("distinguished", help="distinguished parabolics and types")
    p.add_argument("--family", required=True,
                   help="a|b|c|d, group name, or g2|f4|e6|e7|e8")
    p.add_argument("--rank", type=int)
    p.set_defaults(fn=_cmd_distinguished)

    p = sub.add_parser("bala-carter", help="pair parameterization of classes")
    p.add_argument("action", choices=["label", "enumerate", "image"])
    add_group_flags(p)
    p.add_argument("--partition", help='Jordan type, e.g. "4,4,2" (label)')
    p.add_argument("--gl", default="", help='pair factor sizes, e.g. "4" (image)')
    p.add_argument("--dist", default="", help='pair distinguished type (image)')
    p.set_defaults(fn=_cmd_bala_carter)

    p = sub.add_parser("verify", help="brute-force finite-field check")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--q", type=int, required=True, choices=[2, 3, 4, 5])
    p.add_argument("--levi")
    p.add_argument("--nodes")
    p.add_argument("--seed", type=int)
    p.add_argument("--sample", type=int)
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("selfcheck", help="run the acceptance battery")
    p.add_argument("--only", help='comma-separated criterion numbers, e.g. "1,5"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.fn(args)
    except _VerificationFailure as exc:
        print(str(exc).rstrip("\n"))
        _emit_error("verification-failed", "see document above")
        return 4
    except UnsupportedRegimeError as exc:
        _emit_error("unsupported-regime", str(exc))
        return 3
    except DomainError as exc:
        _emit_error("domain", str(exc))
        return 2
    if isinstance(doc, str):
        sys.stdout.write(doc)
    else:
        print(json.dumps(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
