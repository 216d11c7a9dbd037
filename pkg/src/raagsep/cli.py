"""Command line front end.  Every command prints one JSON object on stdout.

Exit codes: 0 success, 1 input error, 2 verification failure,
3 construction incomplete, 4 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .complexes import (
    InvariantError, NotLocalIsometry, canonical_completion, check_local_isometry,
    cover_errors, pi1_generators,
)
from .construction import ConstructionIncomplete, PreconditionError, construct, verify_theorem_a
from .development import develop_hull
from .raag import InputError, normal_form, parse_word
from .separability import (
    BudgetExceeded, member, min_sep_index_oracle, sep_growth, separate, short_transversal,
)

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_INCOMPLETE, EXIT_BUDGET = 0, 1, 2, 3, 4

COMMANDS = ("normalize", "member", "separate", "theorem-a", "complete", "hull",
            "oracle", "sep-growth", "check", "transversal")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="raagsep", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("-g", "--graph", help="defining graph file")
    p.add_argument("-z", "--complex", help="labeled complex file")
    p.add_argument("-w", "--word", help='word, e.g. "a b^-1 c"')
    p.add_argument("--gens", help="subgroup generators: words separated by commas")
    p.add_argument("--points", help="hull points: words separated by commas, empty for the identity")
    p.add_argument("--max", type=int, default=8, help="largest index searched by the oracle")
    p.add_argument("--budget", type=int, default=2_000_000, help="oracle search node budget")
    p.add_argument("-n", type=int, default=3, help="word length for sep-growth")
    return p


def parse_inputs(graph_path=None, complex_path=None, word_text=None):
    """Load ``(graph, complex, normal form)``; missing pieces come back as None."""
    graph = io.load_graph(graph_path) if graph_path else None
    Z = io.load_complex(complex_path, graph) if complex_path else None
    if graph is None and Z is not None:
        graph = Z.graph
    g = None
    if word_text is not None:
        if graph is None:
            raise InputError("a word needs a graph")
        g = normal_form(graph, parse_word(graph, word_text))
    return graph, Z, g


def _need(value, flag):
    if value is None:
        raise InputError(f"missing {flag}")
    return value


def _words(graph, text):
    if not text:
        return []
    # an empty item stands for the identity
    return [normal_form(graph, parse_word(graph, t)) for t in text.split(",")]


def execute(args) -> tuple[dict, int]:
    graph, Z, g = parse_inputs(args.graph, args.complex, args.word)
    cmd = args.command
    out: dict = {"schema": SCHEMA, "command": cmd}
    code = EXIT_OK
    if cmd == "normalize":
        g = _need(g, "-w")
        out.update(normal_form=io.word_json(g), length=g.length)
    elif cmd == "member":
        Z, g = _need(Z, "-z"), _need(g, "-w")
        out.update(member=member(Z, g))
    elif cmd == "check":
        Z = _need(Z, "-z")
        rep = check_local_isometry(Z)
        out.update(ok=rep.ok, violations=[[x, list(a), list(b)] for x, a, b in rep.violations],
                   invariant_errors=rep.invariant_errors)
        code = EXIT_OK if rep.ok else EXIT_VERIFY
    elif cmd == "theorem-a":
        Z, g = _need(Z, "-z"), _need(g, "-w")
        c = construct(Z, g)
        rep = verify_theorem_a(Z, g, c.Y)
        out.update(Y=io.complex_json(c.Y), size=rep.size, bound=rep.bound,
                   checks={"contains_Z": rep.contains_Z, "local_isometry": rep.local_isometry,
                           "g_not_closed": rep.g_not_closed, "size_bound": rep.size_bound},
                   chain_length=len(c.partition.chain), verified=rep.ok, details=rep.details)
        code = EXIT_OK if rep.ok else EXIT_VERIFY
    elif cmd == "separate":
        Z, g = _need(Z, "-z"), _need(g, "-w")
        cert = separate(Z, g)
        verified = cert.verify()
        out.update(index=cert.index, bound=Z.size * (g.length + 1), verified=verified,
                   g=io.word_json(g), subgroup_gens=[io.word_json(h) for h in cert.subgroup_gens],
                   cover=io.cover_json(cert.cover))
        code = EXIT_OK if verified else EXIT_VERIFY
    elif cmd == "complete":
        Z = _need(Z, "-z")
        C = canonical_completion(Z)
        out.update(degree=C.degree, cover=io.cover_json(C), verified=not cover_errors(C) and C.contains(Z))
    elif cmd == "hull":
        graph = _need(graph, "-g")
        pts = _words(graph, _need(args.points, "--points"))
        if not pts:
            raise InputError("no hull points")
        D = develop_hull(graph, pts)
        out.update(vertices=[io.word_json(p) for p in D.sorted_vertices()], size=len(D))
    elif cmd == "oracle":
        graph, g = _need(graph, "-g"), _need(g, "-w")
        gens = _words(graph, args.gens) if args.gens else (pi1_generators(Z) if Z else [])
        out.update(min_index=min_sep_index_oracle(graph, gens, g, args.max, args.budget), max=args.max)
    elif cmd == "sep-growth":
        Z = _need(Z, "-z")
        rep = sep_growth(Z, args.n, args.max)
        out.update(n=args.n, value=rep.value,
                   table=[{"g": io.word_json(h), "oracle": d, "certificate": i}
                          for h, (d, i) in rep.table.items()],
                   incomplete=[io.word_json(h) for h in rep.incomplete])
    elif cmd == "transversal":
        Z = _need(Z, "-z")
        if cover_errors(Z):
            raise InputError("transversal needs a cover; run 'complete' first")
        words = short_transversal(Z, Z.base)
        out.update(transversal=[io.word_json(w) for w in words], degree=Z.size)
    return out, code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = execute(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"schema": SCHEMA, "error": "budget", "partial": exc.partial}))
        return EXIT_BUDGET
    except ConstructionIncomplete as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"schema": SCHEMA, "error": "construction-incomplete", "message": str(exc)}))
        return EXIT_INCOMPLETE
    except (InvariantError, NotLocalIsometry) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"schema": SCHEMA, "error": "verification", "message": str(exc)}))
        return EXIT_VERIFY
    except (InputError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"schema": SCHEMA, "error": "input", "message": str(exc)}))
        return EXIT_INPUT
    print(json.dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
