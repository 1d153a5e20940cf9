"""Command-line front end.

Thin dispatch over the library: every subcommand reads its input files,
calls one solver, and prints either plain text or one JSON object per
result line.  Exit codes: 0 answered positively, 1 answered negatively,
2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acronym as acronym_mod
from . import edsm as edsm_mod
from . import generate, intersect, similarity, unary
from .core import CapExceeded, EDString, ParseError, parse_eds, serialize_eds

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_eds(path: str) -> EDString:
    with open(path, "rb") as handle:
        return parse_eds(handle.read())


def _emit(args, task: str, plain: str, **payload):
    if args.json:
        record = {"task": task}
        record.update(payload)
        print(json.dumps(record))
    else:
        print(plain)


def _cmd_intersect(args) -> int:
    t1, t2 = _read_eds(args.first), _read_eds(args.second)
    if args.count:
        count = intersect.count_matching_pairs(t1, t2)
        _emit(args, "count", str(count), answer=count > 0, count=count)
        return EXIT_YES if count else EXIT_NO
    if args.shortest or args.longest:
        result = (intersect.shortest_witness(t1, t2) if args.shortest
                  else intersect.longest_witness(t1, t2))
        task = "shortest" if args.shortest else "longest"
        if not result.found:
            _emit(args, task, "NO", answer=False)
            return EXIT_NO
        _emit(args, task, f"YES {result.length} {result.witness}",
              answer=True, witness=result.witness, length=result.length)
        return EXIT_YES
    if args.witness:
        result = intersect.witness(t1, t2)
        if not result.found:
            _emit(args, "witness", "NO", answer=False)
            return EXIT_NO
        _emit(args, "witness", f"YES {result.witness}", answer=True,
              witness=result.witness, length=result.length)
        return EXIT_YES
    answer = intersect.intersect_decide(t1, t2)
    _emit(args, "intersect", "YES" if answer else "NO", answer=answer)
    return EXIT_YES if answer else EXIT_NO


def _cmd_ms(args) -> int:
    t1, t2 = _read_eds(args.first), _read_eds(args.second)
    ms = similarity.matching_statistics(t1, t2)
    _emit(args, "ms", " ".join(map(str, ms)), answer=True, ms=ms)
    return EXIT_YES


def _cmd_lcs(args) -> int:
    t1, t2 = _read_eds(args.first), _read_eds(args.second)
    length, witness_str = similarity.longest_common_substring(t1, t2)
    _emit(args, "lcs", f"{length} {witness_str}", answer=True,
          length=length, witness=witness_str)
    return EXIT_YES


def _cmd_lcseq(args) -> int:
    t1, t2 = _read_eds(args.first), _read_eds(args.second)
    length, witness_str = similarity.longest_common_subsequence(t1, t2)
    _emit(args, "lcseq", f"{length} {witness_str}", answer=True,
          length=length, witness=witness_str)
    return EXIT_YES


def _cmd_edsm(args) -> int:
    pattern, text = _read_eds(args.pattern), _read_eds(args.text)
    if args.report_starts or args.report_ends:
        report = edsm_mod.doubly_edsm(pattern, text, mode="report")
        segments = (report.start_segments if args.report_starts
                    else report.end_segments)
        found = bool(report)
        _emit(args, "edsm", " ".join(map(str, segments)) or "NO",
              answer=found, segments=list(segments))
        return EXIT_YES if found else EXIT_NO
    found = edsm_mod.doubly_edsm(pattern, text, mode="decide")
    _emit(args, "edsm", "YES" if found else "NO", answer=found)
    return EXIT_YES if found else EXIT_NO


def _cmd_approx(args) -> int:
    if args.match:
        pattern, text = _read_eds(args.match[0]), _read_eds(args.match[1])
        result, report = edsm_mod.approx_edsm(pattern, text, args.metric,
                                              k=args.k)
        if not result.finite:
            _emit(args, "approx-edsm", "NO", answer=False)
            return EXIT_NO
        _emit(args, "approx-edsm", f"{result.distance}", answer=True,
              distance=result.distance, segments=list(report.end_segments))
        return EXIT_YES
    if not (args.first and args.second):
        print("approx needs two positional files or --match", file=sys.stderr)
        return EXIT_USAGE
    t1, t2 = _read_eds(args.first), _read_eds(args.second)
    if args.k is not None:
        result = edsm_mod.approx_intersect_bounded(t1, t2, args.metric, args.k)
    else:
        result = edsm_mod.approx_intersect(t1, t2, args.metric)
    if not result.finite:
        _emit(args, "approx", "NO", answer=False)
        return EXIT_NO
    _emit(args, "approx", f"{result.distance}", answer=True,
          distance=result.distance)
    return EXIT_YES


def _cmd_unary(args) -> int:
    with open(args.first) as handle:
        t1 = unary.parse_compact(handle.read())
    with open(args.second) as handle:
        t2 = unary.parse_compact(handle.read())
    lengths = unary.unary_intersect(t1, t2)
    _emit(args, "unary", " ".join(map(str, lengths)) or "EMPTY",
          answer=bool(lengths), lengths=lengths)
    return EXIT_YES if lengths else EXIT_NO


def _cmd_acronym(args) -> int:
    with open(args.dictionary) as handle:
        entries = [line.strip() for line in handle if line.strip()]
    minlens = None
    if args.minlens:
        minlens = tuple(int(x) for x in args.minlens.split(","))
    inst = acronym_mod.AcronymInstance(tuple(entries), tuple(args.words),
                                       minlens or ())
    found = acronym_mod.acronym_report(inst)
    _emit(args, "acronym", " ".join(sorted(found)) or "NO",
          answer=bool(found), witness=sorted(found))
    return EXIT_YES if found else EXIT_NO


def _cmd_gen(args) -> int:
    if args.kind == "random":
        eds = generate.random_eds(
            args.seed, n_range=(args.min_segments, args.max_segments),
            seg_size_range=(args.min_variants, args.max_variants),
            len_range=(args.min_length, args.max_length),
            alphabet=args.alphabet, eps_prob=args.eps_prob)
        text = serialize_eds(eds)
        if args.output:
            with open(args.output, "w") as handle:
                handle.write(text + "\n")
        else:
            print(text)
        return EXIT_YES
    vectors = args.vectors.split(",")
    t1, t2 = generate.ov_to_edsi(vectors)
    for path, eds in ((args.out_first, t1), (args.out_second, t2)):
        if path:
            with open(path, "w") as handle:
                handle.write(serialize_eds(eds) + "\n")
        else:
            print(serialize_eds(eds))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eds", description="elastic-degenerate string comparison")
    parser.add_argument("--json", action="store_true",
                        help="one JSON object per result line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intersect", help="language intersection")
    p.add_argument("first")
    p.add_argument("second")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--witness", action="store_true")
    group.add_argument("--shortest", action="store_true")
    group.add_argument("--longest", action="store_true")
    group.add_argument("--count", action="store_true")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("ms", help="matching statistics")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_ms)

    p = sub.add_parser("lcs", help="longest common substring")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_lcs)

    p = sub.add_parser("lcseq", help="longest common subsequence")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_lcseq)

    p = sub.add_parser("edsm", help="doubly ED string matching")
    p.add_argument("pattern")
    p.add_argument("text")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--report-starts", action="store_true")
    group.add_argument("--report-ends", action="store_true")
    p.set_defaults(func=_cmd_edsm)

    p = sub.add_parser("approx", help="approximate intersection / matching")
    p.add_argument("first", nargs="?")
    p.add_argument("second", nargs="?")
    p.add_argument("--metric", choices=("hamming", "edit"), required=True)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--match", nargs=2, metavar=("PATTERN", "TEXT"))
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("unary", help="unary intersection (compact inputs)")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_unary)

    p = sub.add_parser("acronym", help="acronym generation")
    p.add_argument("dictionary")
    p.add_argument("--words", nargs="+", required=True)
    p.add_argument("--minlens", default=None,
                   help="comma-separated per-word minimum prefix lengths")
    p.set_defaults(func=_cmd_acronym)

    p = sub.add_parser("gen", help="instance generators")
    gensub = p.add_subparsers(dest="kind", required=True)
    g = gensub.add_parser("random")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--min-segments", type=int, default=1)
    g.add_argument("--max-segments", type=int, default=6)
    g.add_argument("--min-variants", type=int, default=1)
    g.add_argument("--max-variants", type=int, default=4)
    g.add_argument("--min-length", type=int, default=1)
    g.add_argument("--max-length", type=int, default=4)
    g.add_argument("--alphabet", type=int, default=3)
    g.add_argument("--eps-prob", type=float, default=0.2)
    g.add_argument("-o", "--output")
    g.set_defaults(func=_cmd_gen)
    g = gensub.add_parser("ov")
    g.add_argument("--vectors", required=True,
                   help="comma-separated bit strings, e.g. 10,01,11")
    g.add_argument("--out-first")
    g.add_argument("--out-second")
    g.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
