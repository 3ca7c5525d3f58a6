"""Command-line front end.  One subcommand per operation family.

Every run prints a single JSON object (or CSV for tabular reports) on
stdout.  Exit codes: 0 for success or a positive verdict, 1 for a computed
negative verdict (illegal word, non-realizable base word, invalid cycle,
non-forcing pattern), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import census, codec, graycode
from . import states as st
from .codec import BaseWord, Codeword


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.replace(" ", "").split(","))


def _parse_range(text: str) -> range:
    raw = text.replace("..", ":")
    if ":" in raw:
        lo, hi = raw.split(":")
        return range(int(lo), int(hi) + 1)
    n = int(raw)
    return range(n, n + 1)


def _render_perm(perm: Sequence[int]) -> str:
    return "[" + ",".join(map(str, perm)) + "]"


def _cmd_demodulate(args) -> tuple[dict, int]:
    base = codec.demodulate(_parse_ints(args.profile), args.t)
    return {"profile": args.profile, "base_word": base.to_text()}, 0


def _cmd_encode(args) -> tuple[dict, int]:
    base = BaseWord.from_text(args.word, args.t)
    word = codec.encode(base)
    return {"base_word": base.to_text(), "codeword": word.to_text()}, 0


def _cmd_decode(args) -> tuple[dict, int]:
    word = Codeword.from_text(args.word, args.t)
    method = args.method
    if method == "auto":
        method = "anchored" if args.t == 3 else "state"
    if method == "anchored":
        base = codec.decode3(word)
        found = [] if base is None else [base]
    else:
        found = sorted(codec.decode_general(word), key=lambda b: b.symbols)
    payload = {
        "codeword": word.to_text(),
        "method": method,
        "base_word": found[0].to_text() if len(found) == 1 else None,
        "base_words": [b.to_text() for b in found],
        "count": len(found),
    }
    return payload, 0 if found else 1


def _cmd_check(args) -> tuple[dict, int]:
    if args.word is None and args.base_word is None:
        raise ValueError("check needs --word or --base-word")
    if args.word is not None:
        word = Codeword.from_text(args.word, args.t)
        legal = codec.is_legal(word)
        return {"codeword": word.to_text(), "legal": legal}, 0 if legal else 1
    base = BaseWord.from_text(args.base_word, args.t)
    ok, witness = codec.realizable(base)
    payload = {
        "base_word": base.to_text(),
        "realizable": ok,
        "witness": ",".join(map(str, witness)) if witness is not None else None,
    }
    return payload, 0 if ok else 1


def _report_payload(reports: list[census.CountReport]) -> list[dict]:
    return [r.to_json_dict() for r in reports]


def _cmd_count(args) -> tuple[dict, int]:
    pattern = _parse_ints(args.pattern) if args.pattern else None
    if args.range is not None:
        ns = _parse_range(args.range)
        reports = census.density_report(args.t, ns, pattern=pattern, jobs=args.jobs)
        return {"reports": _report_payload(reports), "_csv": reports}, 0
    if args.n is None:
        raise ValueError("count needs --n or --range")
    method = args.method
    if method == "auto":
        method = "legality" if args.t**args.n <= census.enumeration_budget(5_000_000) else "rankings"
    if method == "rankings":
        report = census.count_by_rankings(args.t, args.n)
    else:
        report = census.count_by_legality(args.t, args.n, jobs=args.jobs)
    payload = report.to_json_dict()
    payload["method"] = method
    if report.base_word_count is not None:
        payload["base_word_count"] = report.base_word_count
    payload["_csv"] = [report]
    return payload, 0


def _cmd_spectral(args) -> tuple[dict, int]:
    pattern = _parse_ints(args.pattern)
    automaton = census.factor_automaton(pattern, args.t)
    rate = census.spectral_radius(automaton.matrix)
    payload = {
        "pattern": ",".join(map(str, pattern)),
        "matrix": [list(row) for row in automaton.matrix],
        "growth_rate": rate,
    }
    return payload, 0


def _cmd_states(args) -> tuple[dict, int]:
    if args.digits is not None:
        digits = _parse_ints(args.digits)
        pi = tuple(_parse_ints(args.pi)) if args.pi else None
        if args.method == "oracle":
            state = st.state_oracle(digits, args.t, pi)
        else:
            state = st.chain(st.initial_state(digits[: args.t - 1], args.t, pi), digits[args.t - 1 :])
        payload = {
            "digits": ",".join(map(str, digits)),
            "pi": _render_perm(pi) if pi else None,
            "state": state.render(),
            "complete": st.is_complete(state),
        }
        return payload, 0
    table = st.tail_table(args.t)
    complete = sorted(st.complete_states(args.t), key=lambda s: s.perm)
    rows = []
    for state in complete:
        for pi in st.head_permutations(args.t):
            tails = sorted(table.tails[(state, pi)])
            rows.append(
                {
                    "state": state.render(),
                    "pi": _render_perm(pi),
                    "count": len(tails),
                    "tails": ["".join(map(str, tail)) for tail in tails],
                }
            )
    payload = {
        "complete_states": [s.render() for s in complete],
        "tail_table": rows,
        "_csv_rows": [("state", "pi", "count", "tails")]
        + [(r["state"], r["pi"], str(r["count"]), " ".join(r["tails"])) for r in rows],
    }
    return payload, 0


def _cmd_pattern(args) -> tuple[dict, int]:
    if args.pattern is not None:
        pattern = _parse_ints(args.pattern)
        forces, landing = st.pattern_forces_complete(pattern, args.t)
        payload = {
            "pattern": ",".join(map(str, pattern)),
            "forces_complete": forces,
            "landing_state": landing.render() if landing is not None else None,
        }
        return payload, 0 if forces else 1
    if args.max_len is None:
        raise ValueError("pattern needs --pattern or --max-len")
    found = sorted(st.find_completing_pattern(args.t, args.max_len))
    payload = {
        "max_len": args.max_len,
        "count": len(found),
        "patterns": [",".join(map(str, p)) for p in found],
    }
    return payload, 0


def _cmd_gray(args) -> tuple[dict, int]:
    length, cycle = graycode.longest_cycle(args.n, args.w, args.mode)
    payload = {
        "n": args.n,
        "w": args.w,
        "mode": args.mode,
        "length": length,
        "bound_2n": 2 * args.n,
        "cycle": list(cycle.words) if cycle is not None else None,
    }
    if args.out and cycle is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(cycle.to_file_text())
        payload["out"] = args.out
    return payload, 0


def _cmd_validate(args) -> tuple[dict, int]:
    if args.file:
        with open(args.file, encoding="utf-8") as handle:
            words = list(graycode.GrayCycle.from_file_text(handle.read()).words)
    elif args.words:
        words = args.words.split(",")
    else:
        raise ValueError("validate needs --words or --file")
    result = graycode.validate_cycle(words, args.n, args.w, args.mode)
    payload = {
        "n": args.n,
        "w": args.w,
        "length": len(words),
        "valid": result.ok,
        "reason": result.reason,
        "detail": result.detail,
    }
    return payload, 0 if result.ok else 1


_HANDLERS = {
    "demodulate": _cmd_demodulate,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "check": _cmd_check,
    "count": _cmd_count,
    "spectral": _cmd_spectral,
    "states": _cmd_states,
    "pattern": _cmd_pattern,
    "gray": _cmd_gray,
    "validate": _cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrm",
        description="Local rank modulation: codecs, legality, enumeration, and Gray-code search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, t=True, jobs=False):
        p = sub.add_parser(name, help=help_text)
        if t:
            p.add_argument("--t", type=int, default=3, help="window size (default 3)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if jobs:
            p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
        return p

    p = add("demodulate", "charge profile to base word")
    p.add_argument("--profile", required=True, help="comma-separated charge levels")

    p = add("encode", "base word to codeword")
    p.add_argument("--word", required=True, help="base word, comma-separated symbols")

    p = add("decode", "codeword to realizable base word(s)")
    p.add_argument("--word", required=True, help="codeword digit string")
    p.add_argument("--method", choices=("auto", "anchored", "state"), default="auto")

    p = add("check", "legality of a codeword or realizability of a base word")
    p.add_argument("--word", help="codeword digit string")
    p.add_argument("--base-word", dest="base_word", help="base word, comma-separated symbols")

    p = add("count", "census of legal codewords", jobs=True)
    p.add_argument("--n", type=int, help="word length")
    p.add_argument("--range", help="length range lo:hi (inclusive)")
    p.add_argument("--method", choices=("auto", "rankings", "legality"), default="auto")
    p.add_argument("--pattern", help="forcing pattern, comma-separated digits")

    p = add("spectral", "factor automaton and its growth rate")
    p.add_argument("--pattern", required=True, help="forbidden factor, comma-separated digits")

    p = add("states", "complete states, tail table, or a state chase")
    p.add_argument("--digits", help="digit prefix, comma-separated")
    p.add_argument("--pi", help="head order, comma-separated (e.g. 2,1)")
    p.add_argument("--method", choices=("chain", "oracle"), default="chain")

    p = add("pattern", "forcing-pattern test or exhaustive search")
    p.add_argument("--pattern", help="digit sequence, comma-separated")
    p.add_argument("--max-len", dest="max_len", type=int, help="search all patterns up to this length")

    p = add("gray", "exhaustive longest-cycle search", t=False, jobs=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, default=2)
    p.add_argument("--mode", choices=graycode.MODES, default="adjacent")
    p.add_argument("--out", help="write the witness cycle file here")

    p = add("validate", "check a candidate cycle", t=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, default=2)
    p.add_argument("--mode", choices=graycode.MODES, default="adjacent")
    p.add_argument("--words", help="comma-separated binary words, cyclic order")
    p.add_argument("--file", help="cycle file (header then one word per line)")

    return parser


def _emit_csv(payload: dict) -> str:
    if "_csv" in payload:
        reports = payload["_csv"]
        lines = [census.CountReport.csv_header()]
        lines += [r.to_csv_row() for r in reports]
        return "\n".join(lines)
    if "_csv_rows" in payload:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(payload["_csv_rows"])
        return buffer.getvalue().rstrip("\n")
    raise ValueError("this command has no CSV form")


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    t = getattr(args, "t", 2)
    try:
        payload, code = handler(args)
    except (ValueError, OSError) as exc:
        error = {"command": args.command, "t": t, "ok": False, "error": str(exc)}
        print(json.dumps(error))
        return 2
    if args.format == "csv":
        print(_emit_csv(payload))
        return code
    payload.pop("_csv", None)
    payload.pop("_csv_rows", None)
    ordered = {"command": args.command, "t": t, "ok": code == 0}
    ordered.update(payload)
    print(json.dumps(ordered))
    return code


def main(argv: Sequence[str] | None = None) -> int:
    return dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
