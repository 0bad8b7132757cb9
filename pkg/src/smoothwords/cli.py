"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
mismatch. With ``--json`` every command emits a single JSON document on
standard output.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .core import DomainError, OrderedAlphabet, Word
from .runlength import decode, encode
from .smooth import (
    DirectiveSequence,
    PrefixStream,
    kolakoski,
    maximal_word,
    minimal_word,
    phi,
    phi_inverse_prefix,
    stream_from_directive,
)
from .lyndon import ConsistentUpTo, check_lyndon_prefix, duval_factorize, stream_factorize
from . import characterize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(doc: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_alphabet(text: str) -> OrderedAlphabet:
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError(f"alphabet must be 'a,b', got {text!r}")
    return OrderedAlphabet(int(parts[0]), int(parts[1]))


def _require_alphabet(args) -> OrderedAlphabet:
    if not getattr(args, "alphabet", None):
        raise DomainError("this command needs --alphabet a,b")
    return _parse_alphabet(args.alphabet)


def _stream_from_flags(args) -> PrefixStream:
    if getattr(args, "kolakoski", None):
        parts = args.kolakoski.split(",")
        if len(parts) != 2:
            raise DomainError(f"--kolakoski takes 'first,second', got {args.kolakoski!r}")
        return kolakoski(int(parts[0]), int(parts[1]))
    if getattr(args, "directive", None):
        return stream_from_directive(
            DirectiveSequence.parse(args.directive), _require_alphabet(args)
        )
    if getattr(args, "minimal", False):
        return minimal_word(_require_alphabet(args))
    if getattr(args, "maximal", False):
        return maximal_word(_require_alphabet(args))
    raise DomainError("no word source: use --kolakoski, --directive, --minimal or --maximal")


def _input_words(args) -> list[Word]:
    if getattr(args, "word", None) is not None:
        return [Word.parse(args.word)]
    lines = [line.strip() for line in sys.stdin if line.strip()]
    if not lines:
        raise DomainError("no --word given and standard input is empty")
    return [Word.parse(line) for line in lines]


def _emit_word_results(args, results: list[tuple[Word, Word]]) -> None:
    if args.json:
        doc = {"results": [{"input": str(u), "output": str(v)} for u, v in results]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for _, v in results:
            print(v)


def _cmd_generate(args) -> int:
    stream = _stream_from_flags(args)
    w = stream.take(args.length)
    _emit({"word": str(w), "length": len(w)}, args.json, str(w))
    return EXIT_OK


def _cmd_delta(args) -> int:
    _emit_word_results(args, [(u, encode(u)) for u in _input_words(args)])
    return EXIT_OK


def _cmd_delta_inv(args) -> int:
    _emit_word_results(
        args, [(u, decode(u, args.alpha, args.beta)) for u in _input_words(args)]
    )
    return EXIT_OK


def _cmd_phi(args) -> int:
    alphabet = _require_alphabet(args)
    _emit_word_results(args, [(u, phi(u, alphabet)) for u in _input_words(args)])
    return EXIT_OK


def _cmd_phi_inv(args) -> int:
    alphabet = _require_alphabet(args)
    _emit_word_results(
        args, [(u, phi_inverse_prefix(u, alphabet)) for u in _input_words(args)]
    )
    return EXIT_OK


def _cmd_factorize(args) -> int:
    if args.word is not None:
        fact = duval_factorize(Word.parse(args.word))
    else:
        fact = stream_factorize(_stream_from_flags(args), args.length)
    _emit(fact.as_json(), args.json, str(fact))
    return EXIT_OK


def _cmd_check_lyndon(args) -> int:
    if args.word is not None:
        verdict = check_lyndon_prefix(Word.parse(args.word), args.length)
    else:
        verdict = check_lyndon_prefix(_stream_from_flags(args), args.length)
    if isinstance(verdict, ConsistentUpTo):
        doc = {"verdict": "consistent-up-to", "n": verdict.n}
        text = f"consistent-up-to {verdict.n}"
    else:
        doc = {
            "verdict": "violation",
            "suffix_index": verdict.suffix_index,
            "decided_at": verdict.decided_at,
        }
        text = f"violation suffix-index={verdict.suffix_index} decided-at={verdict.decided_at}"
    _emit(doc, args.json, text)
    return EXIT_OK


def _cmd_classify(args) -> int:
    cls = characterize.classify(_require_alphabet(args))
    names = sorted(f.value for f in cls.families)
    _emit(cls.as_json(), args.json, ", ".join(names) if names else "none")
    return EXIT_OK


def _cmd_lemmas(args) -> int:
    report = characterize.verify_parity_lemmas(
        _require_alphabet(args), args.length, samples=args.samples, seed=args.seed
    )
    text = (
        f"blocks={report.blocks} misplaced={report.misplaced_small_blocks + report.misplaced_big_blocks}"
        f" long-big-blocks={report.long_big_blocks}"
        f" transfer-failures={report.transfer_failures} ok={report.ok}"
    )
    _emit(report.as_json(), args.json, text)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _cmd_search(args) -> int:
    alphabet = _require_alphabet(args)
    results = characterize.exhaustive_directive_search(alphabet, args.depth, args.budget)
    survivors = characterize.search_survivors(results)
    doc = {
        "alphabet": [alphabet.a, alphabet.b],
        "depth": args.depth,
        "budget": args.budget,
        "survivors": [str(d) for d in survivors],
    }
    _emit(doc, args.json, "\n".join(str(d) for d in survivors) if survivors else "none")
    return EXIT_OK


def _verify_task(payload):
    (a, b), case_id, budget, consistent_budget = payload
    table = {s.case_id: s for s in characterize.case_table(OrderedAlphabet(a, b))}
    report = characterize.verify_case(
        table[case_id], budget=budget, consistent_budget=consistent_budget
    )
    return report.as_json()


def _cmd_verify_cases(args) -> int:
    if args.alphabet:
        alphabets = [_parse_alphabet(args.alphabet)]
    else:
        alphabets = list(characterize.standard_alphabets())
    tasks = []
    for al in alphabets:
        for spec in characterize.case_table(al):
            if args.case and spec.case_id != args.case:
                continue
            tasks.append(((al.a, al.b), spec.case_id, args.budget, args.consistent_budget))
    if not tasks:
        raise DomainError("no cases selected")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))
    else:
        reports = [_verify_task(t) for t in tasks]
    all_match = all(r["matches_claim"] for r in reports)
    doc = {"reports": reports, "all_match": all_match}
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            mark = "ok" if r["matches_claim"] else "MISMATCH"
            pos = r["witness_position"]
            print(
                f"{r['case_id']:26s} {{{r['alphabet'][0]},{r['alphabet'][1]}}}"
                f" {r['verdict']:20s} pos={pos if pos is not None else '-':>8}"
                f" len={r['expanded_length']:>8} {mark}"
            )
        print(f"{len(reports)} cases, all_match={all_match}")
    return EXIT_OK if all_match else EXIT_MISMATCH


def _add_source_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kolakoski", metavar="A,B", help="fixed-point word starting with A over {A,B}")
    p.add_argument("--directive", metavar="PRE:PERIOD", help="eventually periodic directive")
    p.add_argument("--minimal", action="store_true", help="minimal smooth word (needs --alphabet)")
    p.add_argument("--maximal", action="store_true", help="maximal smooth word (needs --alphabet)")
    p.add_argument("--alphabet", metavar="A,B", help="ordered alphabet a<b")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smoothwords", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="materialize a prefix of an infinite word")
    _add_source_flags(p)
    p.add_argument("-n", "--length", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("delta", help="run-length coding of words")
    p.add_argument("--word", help="word; omit to read one word per stdin line")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("delta-inv", help="alternating-run expansion of count words")
    p.add_argument("--word", help="count word; omit to read stdin")
    p.add_argument("--alpha", type=int, required=True, help="letter of the first run")
    p.add_argument("--beta", type=int, required=True, help="letter of the second run")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_delta_inv)

    p = sub.add_parser("phi", help="first letters of the iterated coding tower")
    p.add_argument("--word", help="smooth prefix; omit to read stdin")
    p.add_argument("--alphabet", metavar="A,B", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("phi-inv", help="guaranteed prefix from a finite directive")
    p.add_argument("--word", help="directive word; omit to read stdin")
    p.add_argument("--alphabet", metavar="A,B", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_phi_inv)

    p = sub.add_parser("factorize", help="non-increasing Lyndon factorization")
    p.add_argument("--word", help="finite word to factorize")
    _add_source_flags(p)
    p.add_argument("-n", "--length", type=int, default=1000, help="stream prefix length")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("check-lyndon", help="bounded infinite-Lyndon check")
    p.add_argument("--word", help="finite word to check")
    _add_source_flags(p)
    p.add_argument("-n", "--length", type=int, default=10_000, help="letters to examine")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_lyndon)

    p = sub.add_parser("classify", help="which smooth Lyndon families the alphabet has")
    p.add_argument("--alphabet", metavar="A,B", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("lemmas", help="block-parity and order-transfer checks on m over {1,b}")
    p.add_argument("--alphabet", metavar="A,B", required=True)
    p.add_argument("-n", "--length", type=int, default=10_000)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser("search", help="exhaustive directive-prefix search")
    p.add_argument("--alphabet", metavar="A,B", required=True)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser(
        "verify-cases", help="verify the whole case catalogue against its claims"
    )
    p.add_argument("--all", action="store_true", help="all standard alphabets (default)")
    p.add_argument("--alphabet", metavar="A,B", help="restrict to one alphabet")
    p.add_argument("--case", help="restrict to one case id")
    p.add_argument("--budget", type=int, default=1 << 22, help="expansion cap per case")
    p.add_argument("--consistent-budget", type=int, default=10_000)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_cases)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"smoothwords: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
