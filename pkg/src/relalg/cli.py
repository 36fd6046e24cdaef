"""Command-line frontend.

Exit codes: 0 on success, 1 when a check/claim fails, 2 on usage errors.
Model arguments accept either a catalog id (``a7[k=2,ident=1]``) or a path
to a model file in the JSON format of ``to_json``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .algebra import AlgebraError, FiniteAlgebra, from_json, to_json
from .axioms import SYSTEMS, axiom_sentence, failing_axioms, status_vector
from .catalog import build_model, list_models
from .report import render_model, run_verification_suite
from .search import SearchSpec, boolean_guided_search, search
from .terms import EvalError, ParseError, check_validity, eval_term, parse_term


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _tag(ok: bool) -> str:
    word = "pass" if ok else "FAIL"
    if _color_enabled():
        code = "32" if ok else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _load_model(ref: str) -> FiniteAlgebra:
    if ref.endswith(".json") or os.path.sep in ref:
        with open(ref) as fh:
            return from_json(fh.read())
    return build_model(ref)


def _parse_axiom_list(text: str) -> list[str]:
    """Comma-separated axiom ids with numeric ranges, e.g. "R1,R3-R10,R8p"."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        lo, sep, hi = item.partition("-")
        if sep and lo.startswith("R") and lo[1:].isdigit() and \
           hi.startswith("R") and hi[1:].isdigit():
            for n in range(int(lo[1:]), int(hi[1:]) + 1):
                out.append(f"R{n}")
        else:
            out.append(item)
    return out


def _parse_env(a: FiniteAlgebra, text: str) -> dict:
    """Bindings "r=2,s=1'" by element index or element name."""
    env = {}
    names = {name: i for i, name in enumerate(a.names)} if a.names else {}
    for item in text.split(","):
        if not item.strip():
            continue
        var, sep, val = item.partition("=")
        if not sep:
            raise EvalError(f"malformed binding {item!r}")
        var, val = var.strip(), val.strip()
        if val in names:
            env[var] = names[val]
        else:
            try:
                env[var] = int(val)
            except ValueError:
                raise EvalError(f"unknown element {val!r}") from None
        if not 0 <= env[var] < a.size:
            raise EvalError(f"element index {env[var]} out of range")
    return env


def _witness_str(a: FiniteAlgebra, env: dict) -> str:
    return ", ".join(f"{k}={a.name_of(v)}" for k, v in sorted(env.items()))


def cmd_list_models(args) -> int:
    for mid in list_models():
        print(mid)
    return 0


def cmd_show(args) -> int:
    a = _load_model(args.model)
    print(render_model(a, "structured" if args.json else "ascii-table"))
    return 0


def cmd_check(args) -> int:
    a = _load_model(args.model)
    system = SYSTEMS[args.system]
    status = status_vector(a, system)
    failing = failing_axioms(status)
    if args.json:
        doc = {
            "model": args.model,
            "system": args.system,
            "failing": failing,
            "axioms": {
                k: (None if w is None else {v: a.name_of(i) for v, i in w.items()})
                for k, w in status.items()
            },
        }
        print(json.dumps(doc, indent=1))
    else:
        for axiom_id, witness in status.items():
            if witness is None:
                print(f"{_tag(True)} {axiom_id}")
            else:
                print(f"{_tag(False)} {axiom_id} at {_witness_str(a, witness)}")
    return 1 if failing else 0


def cmd_eval(args) -> int:
    a = _load_model(args.model)
    term = parse_term(args.term)
    env = _parse_env(a, args.let or "")
    value = eval_term(a, term, env)
    print(a.name_of(value))
    return 0


def cmd_independence(args) -> int:
    a = _load_model(args.model)
    system = SYSTEMS[args.system]
    if args.target not in system:
        print(f"error: {args.target} is not in system {args.system!r}",
              file=sys.stderr)
        return 2
    status = status_vector(a, system)
    failing = failing_axioms(status)
    ok = failing == [args.target]
    print(f"{_tag(ok)} independence of {args.target} within {args.system}: "
          f"failing = {failing or 'none'}")
    if status.get(args.target) is not None:
        print(f"  witness: {_witness_str(a, status[args.target])}")
    return 0 if ok else 1


def cmd_search(args) -> int:
    must_hold = tuple(axiom_sentence(i) for i in _parse_axiom_list(args.hold or ""))
    must_fail = tuple(axiom_sentence(i) for i in _parse_axiom_list(args.fail or ""))
    spec = SearchSpec(args.size, must_hold, must_fail, up_to_iso=args.iso,
                      node_limit=args.limit)
    runner = boolean_guided_search if args.guided else search
    res = runner(spec)
    if args.json:
        doc = {
            "size": args.size,
            "labeled_count": res.labeled_count,
            "iso_class_count": res.iso_class_count,
            "exhaustive": res.exhaustive,
            "nodes_explored": res.nodes_explored,
            "models": [json.loads(to_json(m)) for m in res.models],
        }
        print(json.dumps(doc, indent=1))
    else:
        print(f"labeled models: {res.labeled_count}")
        print(f"iso classes:    {res.iso_class_count}")
        print(f"exhaustive:     {res.exhaustive}")
        print(f"nodes explored: {res.nodes_explored}")
        for i, m in enumerate(res.models):
            print(f"--- model {i} ---")
            print(render_model(m))
    return 0


def cmd_verify_paper(args) -> int:
    report = run_verification_suite(include_long_running=args.long)
    if args.json:
        print(json.dumps(report.to_dict(), indent=1))
    else:
        print(report.render())
    return 0 if report.overall == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relalg",
        description="finite relation-algebra workbench")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-models", help="list catalog model ids")
    p.set_defaults(func=cmd_list_models)

    p = sub.add_parser("show", help="print a model's operation tables")
    p.add_argument("model")
    p.add_argument("--json", action="store_true", help="model file format")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("check", help="axiom status vector of a model")
    p.add_argument("model")
    p.add_argument("--system", choices=sorted(SYSTEMS), default="tarski")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate a term in a model")
    p.add_argument("model")
    p.add_argument("term")
    p.add_argument("--let", help="bindings, e.g. r=0,s=1'")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("independence",
                       help="test that exactly the target axiom fails")
    p.add_argument("model")
    p.add_argument("--target", required=True)
    p.add_argument("--system", choices=sorted(SYSTEMS), default="tarski")
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("search", help="enumerate models of a sentence set")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--hold", help="axioms to satisfy, e.g. R1,R3-R10")
    p.add_argument("--fail", help="axioms that must each fail")
    p.add_argument("--iso", action="store_true", help="up to isomorphism")
    p.add_argument("--limit", type=int, help="node limit")
    p.add_argument("--guided", action="store_true",
                   help="fix the Boolean part (needs R1-R3 in --hold)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", help="run the full claim suite")
    p.add_argument("--long", action="store_true",
                   help="include the long-running uniqueness searches")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AlgebraError, ParseError, EvalError, KeyError, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
