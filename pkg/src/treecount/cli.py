"""``treecount`` command line.

Exit status: 0 on success (an empty set is a result, printed as ``0``),
1 when the input is well formed but outside an operation's domain, 2 for
usage and format errors. Diagnostics go to stderr as one ``error:`` line.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, distance_algebra, formula, graph, oracle, ranks, treegen
from .errors import DomainError, InputFormatError, TreecountError
from .poly import parse_poly


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise InputFormatError(f"expected comma-separated vertices, got {text!r}") from None


def _param_map(text: str) -> dict[int, int]:
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name.startswith("a") or not name[1:].isdigit() or not value.strip().isdigit():
            raise InputFormatError(f"expected a<i>=<vertex>, got {item!r}")
        out[int(name[1:])] = int(value)
    return out


def _check_vertices(g: graph.Graph, vertices) -> None:
    for v in vertices:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range (n={g.n})")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_gen(args) -> None:
    if args.kind == "lifted-complete":
        spec = treegen.GenSpec("lifted-complete", degree=args.degree, lifts=args.lifts)
    elif args.kind == "random-regular":
        spec = treegen.GenSpec(
            "random-regular", degree=args.degree, n=args.n, min_girth=args.min_girth, seed=args.seed
        )
    else:
        spec = treegen.GenSpec("named", name=args.name)
    _emit(graph.format_graph(treegen.generate(spec)), args.output)


def _format_girth(value) -> str:
    if isinstance(value, graph.AboveCutoff):
        return str(value)
    return "inf" if value == graph.INFINITE else str(value)


def cmd_girth(args) -> None:
    g = graph.read_graph(args.file)
    print(_format_girth(graph.girth(g, cutoff=args.cutoff)))


def cmd_lift(args) -> None:
    g = graph.read_graph(args.file)
    graph.write_graph(treegen.lift(g), args.output)


def cmd_count(args) -> None:
    g = graph.read_graph(args.graph)
    f = formula.parse(args.formula)
    params = _param_map(args.params)
    _check_vertices(g, params.values())
    used = formula.params(f)
    missing = [i for i in used if i not in params]
    if missing:
        raise DomainError(f"parameter a{missing[0]} is not assigned")
    brute = oracle.brute_count(g, f, params)
    # unused slots below the highest index get a harmless stand-in vertex
    slots = [params.get(i, params[used[0]]) for i in range(1, used[-1] + 1)]
    cfg = distance_algebra.config_from_graph(g, slots)
    poly = counting.count_formula(cfg, formula.to_dnf(f))
    degree = graph.regular_degree(g)
    print(f"count {brute}")
    print(f"polynomial {poly}")
    print(f"evaluation {poly.eval(g.n, degree) if degree is not None else 'n/a'}")
    print(f"admissible {'yes' if oracle.admissible(g, f) else 'no'}")


def cmd_poly(args) -> None:
    cfg = distance_algebra.parse_config(_read_text(args.config))
    f = formula.parse(args.formula)
    print(counting.count_formula(cfg, formula.to_dnf(f)))


def cmd_partition(args) -> None:
    sys.stdout.write(counting.partition_table(formula.parse(args.schema)).render())


def cmd_rank(args) -> None:
    if args.poly is not None:
        if args.graph or args.tuple is not None or args.base is not None:
            raise UsageError("--poly cannot be combined with --graph/--tuple/--base")
        print(ranks.rank_from_poly(parse_poly(args.poly)))
        return
    if not args.graph or args.tuple is None:
        raise UsageError("rank needs --poly, or --graph with --tuple (and optional --base)")
    g = graph.read_graph(args.graph)
    tup = _vertex_list(args.tuple)
    base = _vertex_list(args.base or "")
    _check_vertices(g, tup + base)
    print(ranks.tuple_rank(g, tup, base))


def cmd_indep(args) -> None:
    g = graph.read_graph(args.graph)
    sets = [_vertex_list(s) for s in (args.A, args.B, args.C)]
    for s in sets:
        _check_vertices(g, s)
    print("yes" if ranks.is_independent(g, *sets) else "no")


def cmd_verify(args) -> None:
    g = graph.read_graph(args.graph)
    formula.parse(args.schema)
    report = oracle.verify(g, args.schema, trials=args.trials, seed=args.seed, mode=args.mode)
    sys.stdout.write(report.render())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="treecount", description="Counting and rank tools for high-girth regular graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a graph")
    gen_kinds = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    lc = gen_kinds.add_parser("lifted-complete", help="iterated lifts of K_{d+1}")
    lc.add_argument("--degree", type=int, required=True)
    lc.add_argument("--lifts", type=int, required=True)
    rr = gen_kinds.add_parser("random-regular", help="seeded random regular graph with a girth floor")
    rr.add_argument("--n", type=int, required=True)
    rr.add_argument("--degree", type=int, required=True)
    rr.add_argument("--min-girth", type=int, default=3)
    rr.add_argument("--seed", type=int, default=0)
    nm = gen_kinds.add_parser("named", help="shipped fixture or k_N / path_N / cycle_N")
    nm.add_argument("name")
    for sp in (lc, rr, nm):
        sp.add_argument("-o", "--output")
        sp.set_defaults(func=cmd_gen)

    gi = sub.add_parser("girth", help="shortest cycle length")
    gi.add_argument("file")
    gi.add_argument("--cutoff", type=int)
    gi.set_defaults(func=cmd_girth)

    li = sub.add_parser("lift", help="write the bit-flip lift of a graph")
    li.add_argument("file")
    li.add_argument("-o", "--output", required=True)
    li.set_defaults(func=cmd_lift)

    co = sub.add_parser("count", help="brute count and polynomial for one parameter tuple")
    co.add_argument("--graph", required=True)
    co.add_argument("--formula", required=True)
    co.add_argument("--params", required=True, help='e.g. "a1=0,a2=5"')
    co.set_defaults(func=cmd_count)

    po = sub.add_parser("poly", help="counting polynomial for a distance configuration")
    po.add_argument("--config", required=True)
    po.add_argument("--formula", required=True)
    po.set_defaults(func=cmd_poly)

    pa = sub.add_parser("partition", help="configuration classes and their polynomials")
    pa.add_argument("--schema", required=True)
    pa.set_defaults(func=cmd_partition)

    ra = sub.add_parser("rank", help="rank of a polynomial or of a tuple over a base set")
    ra.add_argument("--poly")
    ra.add_argument("--graph")
    ra.add_argument("--tuple")
    ra.add_argument("--base")
    ra.set_defaults(func=cmd_rank)

    ind = sub.add_parser("indep", help="path-separation independence test")
    ind.add_argument("--graph", required=True)
    ind.add_argument("--A", required=True)
    ind.add_argument("--B", required=True)
    ind.add_argument("--C", required=True)
    ind.set_defaults(func=cmd_indep)

    ve = sub.add_parser("verify", help="compare brute counts with polynomials")
    ve.add_argument("--graph", required=True)
    ve.add_argument("--schema", required=True)
    ve.add_argument("--trials", type=int, default=200)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--mode", choices=("uniform", "local", "exhaustive"), default="uniform")
    ve.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TreecountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
