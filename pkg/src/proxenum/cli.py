"""Command-line front end.

Input format: a header line ``n m`` followed by ``m`` lines ``u v`` with
0-based vertex ids. ``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

import argparse
import io
import sys
from collections.abc import Sequence

from proxenum import oracle
from proxenum.api import MODES, check_supported, enumerate_solutions
from proxenum.errors import ArgumentError, CapabilityError, CapacityError, GraphParseError
from proxenum.graph import Graph, norm
from proxenum.proximity import Solution
from proxenum.recognition import CLASSES

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPABILITY = 3
EXIT_MISMATCH = 4
EXIT_CAPACITY = 5


def _int(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", line) from None
    if value < 0:
        raise GraphParseError(f"negative value {value}", line)
    return value


def parse_graph_text(text: str) -> Graph:
    header = None
    edges = set()
    count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) != 2:
            raise GraphParseError(f"expected two integers, got {len(body)} tokens", lineno)
        a, b = _int(body[0], lineno), _int(body[1], lineno)
        if header is None:
            header = (a, b, lineno)
            continue
        n = header[0]
        if a >= n or b >= n:
            raise GraphParseError(f"vertex {max(a, b)} out of range for n={n}", lineno)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", lineno)
        edges.add(norm(a, b))
        count += 1
    if header is None:
        raise GraphParseError("missing 'n m' header", 1)
    n, m, hline = header
    if count != m:
        raise GraphParseError(f"header declares {m} edges but {count} edge lines follow", hline)
    try:
        return Graph.from_edges(n, edges)
    except CapacityError:
        raise
    except ArgumentError as exc:
        raise GraphParseError(str(exc), hline) from None


def parse_graph(source=None) -> Graph:
    """Parse a path, an open text stream, or stdin when ``source`` is None or ``-``."""
    if source is None or source == "-":
        return parse_graph_text(sys.stdin.read())
    if isinstance(source, io.TextIOBase):
        return parse_graph_text(source.read())
    with open(source, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def parse_solution(line: str) -> frozenset:
    """Inverse of :meth:`Solution.format`."""
    tokens = line.split()
    if any("-" in t for t in tokens):
        return frozenset(norm(*map(int, t.split("-"))) for t in tokens)
    return frozenset(int(t) for t in tokens)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="proxenum", description="Enumerate minimal completions, deletions and maximal induced subgraphs.")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--input", default="-", help="graph file (default: stdin)")
    p.add_argument("--count-only", action="store_true", help="print only the number of solutions")
    p.add_argument("--limit", type=int, default=None, help="stop after N solutions")
    p.add_argument("--stats", action="store_true", help="delay statistics on stderr")
    p.add_argument("--oracle-check", action="store_true", help="compare against brute force")
    return p


def _oracle_verdict(g: Graph, cls: str, mode: str, seen: list[Solution], complete: bool) -> str | None:
    family = oracle.brute_family(g, cls, mode)
    payloads = [s.payload for s in seen]
    if len(set(payloads)) != len(payloads):
        return "duplicate solutions emitted"
    stray = [p for p in payloads if p not in family]
    if stray:
        return f"{len(stray)} emitted solutions are not in the brute-force family"
    if complete and len(payloads) != len(family):
        return f"missing {len(family) - len(payloads)} solutions"
    return None


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "enum":
        argv = argv[1:]
    args = build_parser().parse_args(argv)
    try:
        check_supported(args.cls, args.mode)
        g = parse_graph(args.input)
        stream = enumerate_solutions(g, args.cls, args.mode)
        if args.oracle_check:
            oracle.brute_family(g, args.cls, args.mode)  # fail early on caps
        seen: list[Solution] = []
        exhausted = True
        for sol in stream:
            if args.limit is not None and len(seen) >= args.limit:
                exhausted = False
                break
            seen.append(sol)
            if not args.count_only:
                print(sol.format(), file=stdout, flush=True)
        if args.count_only:
            print(len(seen), file=stdout, flush=True)
        if args.stats:
            st = stream.stats
            print(f"solutions {len(seen)}", file=stderr)
            print(f"neighbor_evaluations {st.neighbor_evaluations}", file=stderr)
            print(f"max_evaluations_between {st.max_evaluations_between}", file=stderr)
            print(f"max_delay_us {st.max_delay_us:.1f}", file=stderr)
            print(f"mean_delay_us {st.mean_delay_us:.1f}", file=stderr)
        if args.oracle_check:
            problem = _oracle_verdict(g, args.cls, args.mode, seen, exhausted)
            if problem:
                print(f"oracle mismatch: {problem}", file=stderr)
                return EXIT_MISMATCH
            print("oracle check passed", file=stderr)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=stderr)
        return EXIT_CAPABILITY
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    return EXIT_OK


def main() -> None:
    sys.exit(run())
