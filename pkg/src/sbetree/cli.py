"""Command-line front end: ``sbe gen|solve|sweep|verify|help``."""

from __future__ import annotations

import argparse
import sys
from itertools import product

from . import experiments as ex
from .graph import GraphFormatError, OrderingMode, members, random_graph, read_graph, to_text, write_graph
from .oracle import alpha_exact
from .sbe import EdgeRule
from .search import BranchPolicy, SearchConfig, dfs_descend
from .verify import run_checks

ORDERINGS = {
    "arb": OrderingMode.ARBITRARY,
    "arbitrary": OrderingMode.ARBITRARY,
    "asc": OrderingMode.ASCENDING,
    "ascending": OrderingMode.ASCENDING,
    "desc": OrderingMode.DESCENDING,
    "descending": OrderingMode.DESCENDING,
}
POLICIES = {
    "left": BranchPolicy.ALWAYS_LEFT,
    "always-left": BranchPolicy.ALWAYS_LEFT,
    "fewest": BranchPolicy.FEWEST_EDGES,
    "fewest-edges": BranchPolicy.FEWEST_EDGES,
    "most-stable": BranchPolicy.MOST_STABLE,
    "stable": BranchPolicy.MOST_STABLE,
}
EDGE_RULES = {"lex-first": EdgeRule.LEX_FIRST}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _choice(table, what):
    def parse(token: str):
        try:
            return table[token]
        except KeyError:
            raise argparse.ArgumentTypeError(f"unknown {what} {token!r}") from None

    return parse


def parse_variants(text: str) -> tuple[SearchConfig, ...]:
    if text == "all":
        return tuple(SearchConfig(o, p) for o, p in product(OrderingMode, BranchPolicy))
    out = []
    for token in text.split(","):
        ordering, sep, policy = token.strip().partition("/")
        if not sep or ordering not in ORDERINGS or policy not in POLICIES:
            raise argparse.ArgumentTypeError(f"bad variant {token!r}; expected <ordering>/<policy>")
        out.append(SearchConfig(ORDERINGS[ordering], POLICIES[policy]))
    return tuple(out)


def _build_parser() -> _Parser:
    p = _Parser(prog="sbe", description="Split-by-edges tree search for maximum independent sets.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("gen", help="write a uniform G(n,m) random graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-")

    s = sub.add_parser("solve", help="run one depth-first descent on a graph file")
    s.add_argument("--input", required=True)
    s.add_argument("--ordering", type=_choice(ORDERINGS, "ordering"), default=OrderingMode.ARBITRARY)
    s.add_argument("--policy", type=_choice(POLICIES, "policy"), default=BranchPolicy.MOST_STABLE)
    s.add_argument("--edge-rule", type=_choice(EDGE_RULES, "edge rule"), default=EdgeRule.LEX_FIRST)
    s.add_argument("--exact", action="store_true", help="also compute alpha and report success")
    s.add_argument("--trace", action="store_true", help="print the descent path")

    w = sub.add_parser("sweep", help="success/accuracy sweep over edge counts")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--m-from", type=int, required=True)
    w.add_argument("--m-to", type=int, required=True)
    w.add_argument("--m-step", type=int, default=1)
    w.add_argument("--graphs", type=int, default=100)
    w.add_argument("--variants", type=parse_variants, default=ex.FIGURE1_VARIANTS)
    w.add_argument("--seed", type=int, default=1)
    w.add_argument("--out", default="-")
    w.add_argument("--threads", type=int, default=None, help=f"worker count (default ${ex.THREADS_ENV} or 1)")
    w.add_argument("--window", type=int, default=5)
    w.add_argument("--gnuplot", action="store_true", help="write space-separated blocks instead of CSV")

    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--level", choices=("quick", "full"), default="quick")

    sub.add_parser("help", help="show this message")
    return p


def _write(text: str, dest: str, stdout) -> None:
    if dest == "-":
        stdout.write(text)
    else:
        with open(dest, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _fmt_set(s: int) -> str:
    return " ".join(str(v + 1) for v in members(s))


def run_cli(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in (None, "help"):
            stdout.write(parser.format_help())
            return 0
        return _dispatch(args, stdout)
    except UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        stderr.write(f"error: {' '.join(str(exc).split())}\n")
        return 2
    except ValueError as exc:
        # range checks and malformed graph files
        stderr.write(parser.format_usage())
        stderr.write(f"error: {' '.join(str(exc).split())}\n")
        return 2


def _dispatch(args, stdout) -> int:
    if args.command == "gen":
        g = random_graph(args.n, args.m, args.seed)
        if args.out == "-":
            stdout.write(to_text(g))
        else:
            write_graph(g, args.out)
        return 0

    if args.command == "solve":
        g = read_graph(args.input)
        alpha = alpha_exact(g).alpha if args.exact else None
        cfg = SearchConfig(args.ordering, args.policy, args.edge_rule)
        res = dfs_descend(g, cfg, alpha=alpha, trace=args.trace)
        if args.trace:
            for size, side in res.path:
                stdout.write(f"step: |N|={size} -> {side.name.lower()}\n")
        stdout.write(f"found: {_fmt_set(res.found)}\n")
        stdout.write(f"size: {res.size}\n")
        if args.exact:
            stdout.write(f"alpha: {alpha}\n")
            stdout.write(f"success: {str(res.success).lower()}\n")
        return 0

    if args.command == "sweep":
        if args.m_step < 1:
            raise UsageError("--m-step must be positive")
        threads = args.threads if args.threads is not None else ex.default_threads()
        cfg = ex.SweepConfig(
            n=args.n,
            m_values=tuple(range(args.m_from, args.m_to + 1, args.m_step)),
            graphs_per_m=args.graphs,
            variants=args.variants,
            master_seed=args.seed,
            smoothing_window=args.window,
            thread_count=threads,
        )
        rows = ex.run_sweep(cfg)
        _write(ex.emit_gnuplot(rows) if args.gnuplot else ex.emit_csv(rows), args.out, stdout)
        # keep stdout clean when it carries the table
        report = stdout if args.out != "-" else sys.stderr
        if len(cfg.m_values) > cfg.smoothing_window:
            for st in ex.series_stats(rows, cfg.smoothing_window):
                report.write(
                    f"{st.variant}: maxima={st.local_maxima} minima={st.local_minima} "
                    f"min_success={ex.format_rate(st.min_success_rate)} at m={st.argmin_m}\n"
                )
        return 0

    if args.command == "verify":
        results = run_checks(args.level)
        failed = 0
        for r in results:
            status = "PASS" if r.failed == 0 else "FAIL"
            stdout.write(f"{status} {r.name}: {r.passed} passed, {r.failed} failed\n")
            if r.failed:
                stdout.write(f"  first failure: {r.first_failure}\n")
            failed += r.failed
        return 1 if failed else 0

    raise UsageError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
