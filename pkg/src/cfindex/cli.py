"""cfindex command line.

Exit codes: 0 success, 1 failed check or invalid coloring, 2 bad usage or input.
Results go to stdout one item per line; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import gc
import sys
import time

from .coloring import RED, EdgeColoring, format_coloring, read_coloring, verify_conflict_free, write_coloring
from .decision import DecisionResult, Evidence
from .deg2_builder import build_coloring, hypotheses_hold
from .errors import CFError, NoColoringWithin
from .generators import gen_counterexample_search, gen_family, gen_full_tree, gen_random_no_deg2, gen_long_path_instance
from .linear_solver import decide
from .matching_dp import decide_via_matching
from .oracle import brute_force_index
from .sweeps import CHECKS
from .tree_core import Tree, format_tree, read_tree, write_tree


class _Usage(Exception):
    pass


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def to_dot(t: Tree, c: EdgeColoring | None = None) -> str:
    """Graphviz text for t; colored edges are drawn red or blue."""
    lines = ["graph T {"]
    for v in t.vertices:
        lines.append(f"  {v};")
    for u, v in t.edges:
        attr = ""
        if c is not None and c.get((u, v)) is not None:
            attr = f' [color={"red" if c[(u, v)] == RED else "blue"}]'
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _oracle_decide(t: Tree) -> DecisionResult:
    k, w = brute_force_index(t, max_k=3)
    if k <= 2:
        return DecisionResult.two(w)
    return DecisionResult.three(Evidence.ORACLE)


def cmd_decide(args) -> int:
    t = read_tree(args.tree)
    method = {"linear": lambda x: decide(x, trace=args.trace), "matching": decide_via_matching,
              "oracle": _oracle_decide}[args.method]
    res = method(t)
    for step in res.trace:
        print(step)
    print(res.index)
    if res.evidence is not None:
        _err(f"evidence: {res.evidence.value}")
    if res.is_two and args.witness:
        write_coloring(res.witness, args.witness)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(t, res.witness))
    return 0


def cmd_verify(args) -> int:
    t = read_tree(args.tree)
    c = read_coloring(args.coloring)
    res = verify_conflict_free(t, c)
    print(res)
    return 0 if res else 1


def cmd_oracle(args) -> int:
    t = read_tree(args.tree)
    try:
        k, w = brute_force_index(t, max_k=args.max_k)
    except NoColoringWithin:
        print(f">{args.max_k}")
        return 1
    print(k)
    sys.stdout.write(format_coloring(w))
    return 0


def cmd_color(args) -> int:
    t = read_tree(args.tree)
    if not args.assume_thm4:
        raise _Usage("color needs --assume-thm4")
    if not hypotheses_hold(t):
        _err("hypotheses do not hold")
        return 1
    trace: list = []
    c = build_coloring(t, trace)
    if args.trace:
        for step in trace:
            print(step)
    if args.output:
        write_coloring(c, args.output)
    else:
        sys.stdout.write(format_coloring(c))
    return 0


def _parse_ks(items: list[str]) -> dict[str, int]:
    out = {}
    for item in items:
        key, _, val = item.partition("=")
        if not val:
            raise _Usage(f"multiplicity {item!r} is not key=value")
        out[key.strip()] = int(val)
    return out


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "full":
        t = gen_full_tree(args.level, args.branching).tree
    elif kind == "family":
        if not args.family:
            raise _Usage("gen family needs --family")
        t = gen_family(args.family, _parse_ks(args.k), args.branching).tree
    elif kind == "random":
        t = gen_random_no_deg2(args.n, args.seed, colorable=args.colorable)
    elif kind == "thm4":
        t = gen_long_path_instance(args.seed)
    else:
        found = gen_counterexample_search(args.max_core)
        if found is None:
            _err("no counterexample within the bound")
            return 1
        _err(f"short path vertices: {found.short_path_vertices}")
        t = found.short_tree
    if args.output:
        write_tree(t, args.output)
    else:
        sys.stdout.write(format_tree(t))
    return 0


def cmd_enumerate(args) -> int:
    sizes = range(1, args.n + 1) if args.cumulative else [args.n]
    check = CHECKS[args.check]
    rep = check(sizes) if args.check != "obs21" else check(sizes, no_deg2=args.no_deg2)
    print(rep)
    return 0 if rep.ok else 1


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(float(s)) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise _Usage(f"bad --sizes: {exc}") from exc


def bench(sizes: list[int], seed: int) -> list[tuple[int, float]]:
    """Seconds spent in the linear solver (tree construction excluded) per size."""
    rows = []
    for n in sizes:
        t = gen_random_no_deg2(n, seed, colorable=True)
        # like timeit, keep the cyclic collector out of the measurement
        gc.collect()
        gc.disable()
        try:
            start = time.perf_counter()
            res = decide(t)
            rows.append((n, time.perf_counter() - start))
        finally:
            gc.enable()
        if not res.is_two:
            _err(f"n={n}: expected index 2 on a colorable instance, got {res.index}")
    return rows


def cmd_bench(args) -> int:
    rows = bench(_parse_sizes(args.sizes), args.seed)
    print("n,seconds,ns_per_vertex")
    for n, s in rows:
        print(f"{n},{s:.4f},{1e9 * s / n:.1f}")
    if args.plot:
        from .plotting import plot_scaling

        plot_scaling([n for n, _ in rows], [s for _, s in rows], args.plot)
        _err(f"wrote {args.plot}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cfindex", description="Conflict-free chromatic index of trees.")
    sub = p.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("decide", help="decide whether two colors suffice")
    d.add_argument("tree")
    d.add_argument("--method", choices=("linear", "matching", "oracle"), default="linear")
    d.add_argument("--witness", help="write the red/blue coloring here when the answer is 2")
    d.add_argument("--trace", action="store_true", help="print one line per solver step")
    d.add_argument("--dot", help="write a Graphviz rendering of the tree and witness")
    d.set_defaults(func=cmd_decide)

    v = sub.add_parser("verify", help="check a coloring file against a tree")
    v.add_argument("tree")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact index by exhaustive search")
    o.add_argument("tree")
    o.add_argument("--max-k", type=int, default=3)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("color", help="build a red/blue coloring for trees with long degree-2 paths")
    c.add_argument("tree")
    c.add_argument("--assume-thm4", action="store_true",
                   help="use the path-refill construction (degree-2 paths of at least 5 vertices)")
    c.add_argument("--trace", action="store_true")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_color)

    g = sub.add_parser("gen", help="generate an instance as an edge list")
    g.add_argument("kind", choices=("full", "family", "random", "thm4", "counterexample"))
    g.add_argument("--level", type=int, default=3)
    g.add_argument("--branching", type=int, default=2)
    g.add_argument("--family", help="F1..F4")
    g.add_argument("--k", nargs="*", default=[], help="multiplicities such as k1=2")
    g.add_argument("--n", type=int, default=100)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--colorable", action="store_true", help="random tree with index 2")
    g.add_argument("--max-core", type=int, default=8)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("enumerate", help="exhaustive property sweep")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--no-deg2", action="store_true")
    e.add_argument("--check", choices=sorted(CHECKS), required=True)
    e.add_argument("--cumulative", action="store_true", help="sweep every size up to n")
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("bench", help="time the linear solver on random colorable trees")
    b.add_argument("--sizes", default="1e4,1e5,1e6")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--plot", help="save a scaling figure to this PNG")
    b.set_defaults(func=cmd_bench)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _Usage as exc:
        _err(f"usage error: {exc}")
        return 2
    except (CFError, OSError, ValueError) as exc:
        _err(f"error: {exc}")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
