"""Command-line front end.

Subcommands:

* ``compute`` -- second immanantal polynomials of graphs read one per line.
* ``deck`` -- emit the edge/arc deck of each input graph as JSON.
* ``reconstruct`` -- solve a deck JSON document back into a polynomial.
* ``verify`` -- run an identity check over a corpus or seeded random
  instances, one JSON report per line.
* ``bench`` -- time the polynomial and determinant kernels, CSV output.

Exit codes: 0 success; 1 a verify run found a failing identity (kernel bug
signal) or a bench cross-check failed; 2 unreadable or malformed input;
3/4/5 reconstruction finished underdetermined / inconsistent / unsupported.

Output is deterministic given input, flags, and seed. The IMMANANT_THREADS
environment variable caps worker threads; results do not depend on it.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from typing import Callable, Iterator, TextIO

from . import identities as ident
from .graphs import (
    Digraph,
    Graph,
    GraphFormatError,
    EdgeListError,
    parse_digraph6,
    parse_edge_list_json,
    parse_undirected_line,
)
from .immanant import KINDS, g_poly, resolve_kind, tau
from .linalg import det_bareiss, det_crt, set_default_crt_threshold
from .identities import RandomSpec, random_digraph, random_graph, random_matrix, random_symmetric_matrix
from .parallel import pmap, worker_count
from .poly import IntPolynomial
from .reconstruct import (
    DeckError,
    DirectedDeck,
    ReconstructionStatus,
    UndirectedDeck,
    build_directed_deck,
    build_undirected_deck,
    deck_from_json_dict,
    deck_to_json_dict,
    reconstruct_g,
    reconstruct_tau,
)

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_UNDERDETERMINED = 3
EXIT_INCONSISTENT = 4
EXIT_UNSUPPORTED = 5

_STATUS_EXIT = {
    ReconstructionStatus.COMPLETE: EXIT_OK,
    ReconstructionStatus.UNDERDETERMINED: EXIT_UNDERDETERMINED,
    ReconstructionStatus.INCONSISTENT: EXIT_INCONSISTENT,
    ReconstructionStatus.UNSUPPORTED: EXIT_UNSUPPORTED,
}

_CHUNK = 512


class _InputError(Exception):
    """Input problem with a message already formatted for stderr."""


def _open_in(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path, "r", encoding="ascii")
    except OSError as exc:
        raise _InputError(str(exc)) from None


def _open_out(path: str | None) -> tuple[TextIO, bool]:
    if not path or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _numbered_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(stream, 1):
        s = raw.strip()
        if s:
            yield lineno, s


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    chunk = []
    for item in it:
        chunk.append(item)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def _parse_line(fmt: str, directed_wanted: bool, lineno: int, text: str) -> Graph | Digraph:
    try:
        if fmt == "json":
            g = parse_edge_list_json(text)
        elif fmt == "digraph6":
            g = parse_digraph6(text)
        else:
            g = parse_undirected_line(text)
    except (GraphFormatError, EdgeListError) as exc:
        raise _InputError(f"line {lineno}: {exc}") from None
    if directed_wanted and isinstance(g, Graph):
        raise _InputError(f"line {lineno}: kind requires a directed input")
    if not directed_wanted and isinstance(g, Digraph):
        raise _InputError(f"line {lineno}: kind tau requires an undirected input")
    return g


def _stream_per_line(
    args: argparse.Namespace,
    worker: Callable[[tuple[int, str]], str],
) -> int:
    """Run ``worker`` over input lines in parallel chunks, writing results in
    input order."""
    out, close_out = _open_out(args.out)
    stream = _open_in(args.input)
    try:
        for chunk in _chunks(_numbered_lines(stream), _CHUNK):
            for line in pmap(worker, chunk):
                out.write(line)
                out.write("\n")
    finally:
        if close_out:
            out.close()
        if stream is not sys.stdin:
            stream.close()
    return EXIT_OK


def _default_format(kind_name: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    return "graph6" if kind_name == "tau" else "digraph6"


def cmd_compute(args: argparse.Namespace) -> int:
    kind = resolve_kind(args.kind)
    fmt = _default_format(kind.name, args.format)
    directed = kind.name != "tau"

    def worker(item: tuple[int, str]) -> str:
        lineno, text = item
        g = _parse_line(fmt, directed, lineno, text)
        poly = tau(g) if isinstance(g, Graph) else g_poly(g, kind)
        return json.dumps(
            {"input": text, "kind": kind.name, "poly": poly.to_json_dict()},
            separators=(",", ":"),
        )

    return _stream_per_line(args, worker)


def cmd_deck(args: argparse.Namespace) -> int:
    kind = resolve_kind(args.kind)
    fmt = _default_format(kind.name, args.format)
    directed = kind.name != "tau"

    def worker(item: tuple[int, str]) -> str:
        lineno, text = item
        g = _parse_line(fmt, directed, lineno, text)
        if isinstance(g, Graph):
            deck = build_undirected_deck(g)
        else:
            deck = build_directed_deck(g, kind)
        return json.dumps(deck_to_json_dict(deck), separators=(",", ":"))

    return _stream_per_line(args, worker)


def cmd_reconstruct(args: argparse.Namespace) -> int:
    stream = _open_in(args.input)
    try:
        text = stream.read()
    finally:
        if stream is not sys.stdin:
            stream.close()
    try:
        doc = json.loads(text)
        deck = deck_from_json_dict(doc)
        report = (
            reconstruct_tau(deck) if isinstance(deck, UndirectedDeck) else reconstruct_g(deck)
        )
    except (json.JSONDecodeError, DeckError) as exc:
        raise _InputError(f"malformed deck: {exc}") from None
    out, close_out = _open_out(args.out)
    try:
        out.write(json.dumps(report.to_json_dict(), separators=(",", ":")))
        out.write("\n")
    finally:
        if close_out:
            out.close()
    return _STATUS_EXIT[report.status]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

_IDENTITY_INPUTS = {
    "2.2": "symmetric",
    "2.3": "symmetric",
    "2.4": "symmetric",
    "eq3": "symmetric",
    "eq4": "symmetric",
    "3.2": "matrix",
    "3.3": "matrix",
    "3.4": "matrix",
    "eq13": "matrix",
    "2.5": "graph",
    "eq8": "graph",
    "3.5": "digraph",
    "eq22": "digraph",
}


def _parse_random_option(text: str) -> dict:
    """Parse e.g. "n=6,p=1/2,count=100,seed=7" or "symmetric,k=6,count=50,seed=1"."""
    opts = {
        "size": 6,
        "p": Fraction(1, 2),
        "count": 100,
        "seed": 0,
        "lo": -5,
        "hi": 5,
        "symmetric": False,
    }
    if not text:
        return opts
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if token == "symmetric":
            opts["symmetric"] = True
            continue
        if "=" not in token:
            raise _InputError(f"bad --random token {token!r}")
        key, value = token.split("=", 1)
        key = key.strip()
        value = value.strip()
        try:
            if key in ("n", "k"):
                opts["size"] = int(value)
            elif key == "p":
                opts["p"] = Fraction(value)
            elif key in ("count", "seed", "lo", "hi"):
                opts[key] = int(value)
            else:
                raise _InputError(f"unknown --random key {key!r}")
        except ValueError:
            raise _InputError(f"bad --random value {token!r}") from None
    return opts


def _matrix_reports(lemma: str, args: argparse.Namespace) -> Iterator[ident.IdentityReport]:
    if args.corpus:
        raise _InputError(f"identity {lemma} takes matrix instances; use --random, not --corpus")
    opts = _parse_random_option(args.random or "")
    symmetric = opts["symmetric"] or _IDENTITY_INPUTS[lemma] == "symmetric"
    runners = {
        "2.2": ident.verify_mask_sum_det_symmetric,
        "2.3": ident.verify_mask_sum_d2_symmetric,
        "2.4": ident.verify_support_sum_d2_symmetric,
        "3.2": ident.verify_mask_sum_det,
        "3.3": ident.verify_mask_sum_d2,
        "3.4": ident.verify_support_sum_d2,
        "eq3": ident.verify_masked_det_diagonal_sites,
        "eq4": ident.verify_masked_det_offdiagonal_sites,
        "eq13": ident.verify_masked_det_directed_sites,
    }
    run = runners[lemma]
    for i in range(opts["count"]):
        seed = opts["seed"] + i
        spec = RandomSpec(n=opts["size"], entry_range=(opts["lo"], opts["hi"]), seed=seed)
        mat = random_symmetric_matrix(spec) if symmetric else random_matrix(spec)
        label = f"seed={seed} {ident.matrix_instance(mat)}"
        result = run(mat, instance=label)
        if isinstance(result, list):
            yield from result
        else:
            yield result


def _graph_instances(args: argparse.Namespace, directed: bool) -> Iterator[tuple[str, Graph | Digraph]]:
    if args.corpus:
        stream = _open_in(args.corpus)
        try:
            for lineno, text in _numbered_lines(stream):
                try:
                    g = parse_digraph6(text) if directed else parse_undirected_line(text)
                except GraphFormatError as exc:
                    raise _InputError(f"{args.corpus}:{lineno}: {exc}") from None
                yield text, g
        finally:
            if stream is not sys.stdin:
                stream.close()
        return
    opts = _parse_random_option(args.random or "")
    for i in range(opts["count"]):
        seed = opts["seed"] + i
        spec = RandomSpec(
            n=opts["size"], edge_probability=opts["p"], directed=directed, seed=seed
        )
        g = random_digraph(spec) if directed else random_graph(spec)
        label = f"seed={seed} " + (
            ident.digraph_instance(g) if directed else ident.graph_instance(g)
        )
        yield label, g


def _graph_reports(lemma: str, args: argparse.Namespace) -> Iterator[ident.IdentityReport]:
    directed = _IDENTITY_INPUTS[lemma] == "digraph"
    kinds = [resolve_kind(args.kind)] if args.kind else [KINDS["g1"], KINDS["g2"], KINDS["g3"]]
    for label, g in _graph_instances(args, directed):
        if lemma == "2.5":
            yield ident.verify_edge_deck_identity(g, instance=label)
        elif lemma == "eq8":
            yield ident.verify_derivative_split(g, instance=label)
        elif lemma == "3.5":
            for k in kinds:
                yield ident.verify_arc_deck_identity(g, k, instance=label)
        elif lemma == "eq22":
            for k in kinds:
                yield ident.verify_arc_deck_identity_rearranged(g, k, instance=label)


def cmd_verify(args: argparse.Namespace) -> int:
    lemma = args.lemma
    if lemma not in _IDENTITY_INPUTS:
        raise _InputError(
            f"unknown identity {lemma!r}; choose from {', '.join(sorted(_IDENTITY_INPUTS))}"
        )
    family = _IDENTITY_INPUTS[lemma]
    if family in ("symmetric", "matrix"):
        reports = _matrix_reports(lemma, args)
    else:
        reports = _graph_reports(lemma, args)
    out, close_out = _open_out(args.out)
    all_hold = True
    try:
        for rep in reports:
            all_hold &= rep.holds
            out.write(json.dumps(rep.to_json_dict(), separators=(",", ":")))
            out.write("\n")
    finally:
        if close_out:
            out.close()
    return EXIT_OK if all_hold else EXIT_IDENTITY_FAILED


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def _poly_bits(p: IntPolynomial) -> int:
    return max((abs(c).bit_length() for c in p.coeffs), default=0)


def _bench_rows(args: argparse.Namespace) -> Iterator[tuple[int, str, float, int]]:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    p = Fraction(args.p)
    for size in sizes:
        if args.target == "det":
            lo, hi = (int(x) for x in args.entry_range.split(":"))
            mat = random_matrix(RandomSpec(n=size, entry_range=(lo, hi), seed=args.seed))
            t0 = time.perf_counter()
            d_b = det_bareiss(mat)
            t1 = time.perf_counter()
            yield size, "bareiss", (t1 - t0) * 1e3, abs(d_b).bit_length()
            t0 = time.perf_counter()
            d_c = det_crt(mat)
            t1 = time.perf_counter()
            yield size, "crt", (t1 - t0) * 1e3, abs(d_c).bit_length()
            if d_b != d_c:
                raise _BenchMismatch(f"det mismatch at size {size}: {d_b} vs {d_c}")
        else:
            spec = RandomSpec(
                n=size,
                edge_probability=p,
                directed=args.target != "tau",
                seed=args.seed,
            )
            results = {}
            strategies = ["crt"] + (["interp"] if size <= 32 else [])
            for strategy in strategies:
                t0 = time.perf_counter()
                if args.target == "tau":
                    poly = tau(random_graph(spec), strategy=strategy)
                else:
                    poly = g_poly(random_digraph(spec), args.target, strategy=strategy)
                t1 = time.perf_counter()
                results[strategy] = poly
                yield size, f"charpoly-{strategy}", (t1 - t0) * 1e3, _poly_bits(poly)
            if len(set(results.values())) > 1:
                raise _BenchMismatch(f"{args.target} strategy mismatch at size {size}")


class _BenchMismatch(Exception):
    pass


def cmd_bench(args: argparse.Namespace) -> int:
    out, close_out = _open_out(args.out)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["size", "strategy", "millis", "max_coeff_bits"])
    try:
        for size, strategy, millis, bits in _bench_rows(args):
            writer.writerow([size, strategy, f"{millis:.3f}", bits])
    except _BenchMismatch as exc:
        print(f"immanantal bench: {exc}", file=sys.stderr)
        return EXIT_IDENTITY_FAILED
    finally:
        if close_out:
            out.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immanantal",
        description="Exact second-immanantal polynomials, identity checks, and deck reconstruction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, with_formats: bool = True) -> None:
        p.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument(
            "--crt-threshold",
            type=int,
            default=None,
            dest="crt_threshold",
            help="matrix size above which determinants switch from Bareiss to CRT",
        )
        if with_formats:
            p.add_argument(
                "--kind",
                default="tau",
                choices=sorted(KINDS),
                help="polynomial kind: tau (undirected) or g1/g2/g3 (directed)",
            )
            p.add_argument(
                "--format",
                choices=("graph6", "digraph6", "json"),
                default=None,
                help="input line format (default: graph6 for tau, digraph6 for g kinds)",
            )

    p_compute = sub.add_parser("compute", help="polynomials of input graphs, JSON lines")
    add_io(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_deck = sub.add_parser("deck", help="edge/arc decks of input graphs, JSON lines")
    add_io(p_deck)
    p_deck.set_defaults(func=cmd_deck)

    p_rec = sub.add_parser("reconstruct", help="solve one deck JSON document")
    p_rec.add_argument("input", nargs="?", default="-")
    p_rec.add_argument("--out", default=None)
    p_rec.set_defaults(func=cmd_reconstruct)

    p_ver = sub.add_parser("verify", help="check one identity over many instances")
    p_ver.add_argument("--lemma", required=True, help="identity id, e.g. 2.5 or eq13")
    p_ver.add_argument("--corpus", default=None, help="file of graph6/digraph6 lines")
    p_ver.add_argument(
        "--random",
        default=None,
        help="random instances, e.g. 'n=6,p=1/2,count=100,seed=7' or 'symmetric,k=6,count=50,seed=1'",
    )
    p_ver.add_argument("--kind", default=None, choices=("g1", "g2", "g3"))
    p_ver.add_argument("--out", default=None)
    p_ver.add_argument("--crt-threshold", type=int, default=None, dest="crt_threshold")
    p_ver.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time kernels, CSV output")
    p_bench.add_argument("target", choices=("det", "tau", "g1", "g2", "g3"))
    p_bench.add_argument("--sizes", default="32,64", help="comma-separated sizes")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--p", default="1/2", help="edge probability for graph targets")
    p_bench.add_argument("--entry-range", default="-9:9", help="lo:hi for det target")
    p_bench.add_argument("--out", default=None)
    p_bench.add_argument("--crt-threshold", type=int, default=None, dest="crt_threshold")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        worker_count()  # surface a malformed IMMANANT_THREADS before any work
    except ValueError as exc:
        print(f"immanantal: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    threshold = getattr(args, "crt_threshold", None)
    if threshold is not None:
        set_default_crt_threshold(threshold)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"immanantal: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BrokenPipeError:
        return EXIT_OK
    finally:
        if threshold is not None:
            set_default_crt_threshold(None)


if __name__ == "__main__":
    sys.exit(main())
