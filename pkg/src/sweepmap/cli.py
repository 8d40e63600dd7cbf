"""Command-line interface: ``sweepmap <command> ...``.

Exit status: 0 success, 1 bad input, 2 usage error, 3 internal invariant
violated (or a verification run found a counterexample).
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys

from . import equitable as eq
from . import general as gen
from . import lattice as lat
from . import oracle
from . import scheduling as sch
from .errors import InvariantViolation
from .modular import PresweepFailure, inverse_presweep_trace, presweep, sweep_mod, unsweep_mod
from .words import ModWord, format_partition, format_word, parse_letters, parse_partition, parse_word

OK, DOMAIN, USAGE, INVARIANT = 0, 1, 2, 3


# -- input / output helpers -------------------------------------------------------

def _inputs(items):
    for item in items:
        if item == "-":
            for line in sys.stdin:
                yield line.rstrip("\r\n")
        else:
            yield item


def _compact(text: str) -> bool:
    return "," not in text


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.split(",") if t.strip())


def _fmt_ints(xs) -> str:
    return ",".join(map(str, xs))


def _each(args, fn) -> int:
    """Run ``fn`` on every input word; fn returns (text, json_obj[, code])."""
    code = OK
    for text in _inputs(args.words):
        try:
            res = fn(text)
        except (ValueError, IndexError) as e:
            print(f"error: {text!r}: {e}", file=sys.stderr)
            code = max(code, DOMAIN)
            continue
        out, obj = res[0], res[1]
        if len(res) > 2:
            code = max(code, res[2])
        _emit(args, out, obj)
    return code


def _emit(args, out: str, obj):
    if args.json:
        print(json.dumps(obj, ensure_ascii=False))
    else:
        print(out)


# -- modular commands ---------------------------------------------------------------

def cmd_sweep(args):
    def go(text):
        w = parse_word(text, args.mod)
        u = sweep_mod(w)
        return format_word(u, _compact(text)), {"modulus": args.mod, "input": list(w), "output": list(u)}
    return _each(args, go)


def cmd_unsweep(args):
    def go(text):
        u = parse_word(text, args.mod)
        w = unsweep_mod(u)
        return format_word(w, _compact(text)), {"modulus": args.mod, "input": list(u), "output": list(w)}
    return _each(args, go)


def _part_json(p):
    return {"blocks": [list(b) for b in p.blocks], "block_vector": list(p.block_vector()), "text": str(p)}


def _pfmt(args, p, compact):
    return format_partition(p, "·" if args.pretty else "", compact)


def cmd_presweep(args):
    def go(text):
        p = presweep(parse_word(text, args.mod))
        return _pfmt(args, p, _compact(text)), _part_json(p)
    return _each(args, go)


def cmd_unpresweep(args):
    def go(text):
        p = parse_partition(text, args.mod)
        c = _compact(text)
        res, steps = inverse_presweep_trace(p)
        lines = []
        if args.trace:
            for st in steps:
                lines.append(f"{st.step}\t{_pfmt(args, st.remaining, c)}\tlevel {st.level}\t"
                             f"{format_word(ModWord(p.modulus, st.recovered), c) or 'ε'}")
        if isinstance(res, PresweepFailure):
            lines.append(f"unsuccessful: residue {_pfmt(args, res.residue, c)}; "
                         f"visited {_fmt_ints(res.visited)}")
            obj = {"successful": False, "residue": _part_json(res.residue),
                   "residue_positions": list(res.positions), "visited": list(res.visited)}
            return "\n".join(lines), obj, DOMAIN
        lines.append(format_word(res, c))
        return "\n".join(lines), {"successful": True, "output": list(res)}
    return _each(args, go)


def _moves_text(args, steps, c):
    return [f"move {k}: column {s.column} -> letter {s.index} from block {s.source} to {s.target}"
            f"\t{_pfmt(args, s.before, c)}" for k, s in enumerate(steps, 1)]


def _extreme(args, build, trace):
    def go(text):
        u = parse_word(text, args.mod)
        c = _compact(text)
        if args.trace:
            p, steps = trace(u)
            lines = _moves_text(args, steps, c) + [_pfmt(args, p, c)]
            obj = _part_json(p) | {"moves": [{"column": s.column, "index": s.index, "source": s.source,
                                             "target": s.target, "before": str(s.before)} for s in steps]}
            return "\n".join(lines), obj
        p = build(u)
        return _pfmt(args, p, c), _part_json(p)
    return _each(args, go)


def cmd_rightmost(args):
    return _extreme(args, eq.rightmost, eq.rightmost_trace)


def cmd_leftmost(args):
    return _extreme(args, lat.leftmost, lat.leftmost_trace)


def cmd_successful(args):
    def go(text):
        u = parse_word(text, args.mod)
        c = _compact(text)
        start = lat.leftmost(u) if args.start is None else parse_partition(args.start, args.mod)
        if start.word != u:
            raise ValueError(f"start partition {args.start} is not a partition of {text}")
        p, rounds = eq.successful_from_trace(start)
        lines = []
        if args.trace:
            for k, r in enumerate(rounds, 1):
                lines.append(f"round {k}: {_pfmt(args, r.partition, c)}\tvisited {_fmt_ints(r.failure.visited)}"
                             f"\tshift {_fmt_ints(r.failure.positions)}")
        lines.append(_pfmt(args, p, c))
        obj = _part_json(p) | {"rounds": [{"partition": str(r.partition), "visited": list(r.failure.visited),
                                           "shifted": list(r.failure.positions)} for r in rounds]}
        return "\n".join(lines), obj
    return _each(args, go)


def cmd_lattice(args):
    def go(text):
        L = lat.enumerate_lattice(parse_word(text, args.mod))
        if args.dot:
            return L.to_dot().rstrip("\n"), L.to_dict()
        lines = []
        for i, p in enumerate(L.nodes):
            tag = " (bottom)" if i == L.bottom else " (top)" if i == L.top else ""
            ups = ", ".join(str(j) for j in L.upper_covers(i))
            lines.append(f"{i}: {p.pretty()}{tag}" + (f" -> {ups}" if ups else ""))
        return "\n".join(lines), L.to_dict()
    return _each(args, go)


def cmd_array(args):
    def go(text):
        if "|" in text:
            p = parse_partition(text, args.mod)
        else:
            p = eq.rightmost(parse_word(text, args.mod))
        arr = eq.balancing_array(p)
        st = eq.column_statuses(p)[::-1]
        verdict = "equitable" if eq.is_equitable(p) else "not equitable"
        lines = [p.pretty(), arr.render(ascii=args.ascii)]
        lines.append("counts  " + " ".join(str(s.count) for s in st))
        lines.append("targets " + " ".join(str(s.target) for s in st))
        lines.append(verdict)
        obj = {"partition": str(p), "cells": [[row[j] for j in range(p.modulus - 1, -1, -1)] for row in arr.cells],
               "columns": [{"column": s.column, "count": s.count, "target": s.target, "status": s.status} for s in st],
               "equitable": verdict == "equitable"}
        return "\n".join(lines), obj
    return _each(args, go)


# -- integer words ----------------------------------------------------------------

def _content_word(args, text) -> gen.IntWord:
    return gen.IntWord(args.content, _ints(text))


def cmd_zsweep(args):
    def go(text):
        s = gen.sweep_int(_content_word(args, text))
        return str(s), {"content": str(args.content), "input": list(_ints(text)), "output": list(s)}
    return _each(args, go)


def cmd_unzsweep(args):
    def go(text):
        w = gen.unsweep_int(_content_word(args, text))
        return str(w), {"content": str(args.content), "input": list(_ints(text)), "output": list(w)}
    return _each(args, go)


def _params(args) -> gen.DyckParams:
    return gen.DyckParams(args.a, args.b)


def cmd_zeta(args):
    P = _params(args)
    fn = gen.unzeta if args.command == "unzeta" else gen.zeta

    def go(text):
        z = fn(_ints(text), P)
        return str(z), {"a": P.a, "b": P.b, "input": list(_ints(text)), "output": list(z)}
    return _each(args, go)


def _dyck_content(args) -> gen.Content:
    if args.content is not None:
        if args.a is not None or args.b is not None:
            raise ValueError("give either --content or --a/--b, not both")
        return args.content
    if args.a is None or args.b is None:
        raise ValueError("need --content or both --a and --b")
    return gen.DyckParams(args.a, args.b).content


def cmd_dyck_enumerate(args):
    c = _dyck_content(args)
    words = list(gen.dyck_words(c))
    if args.json:
        print(json.dumps({"content": str(c), "count": len(words), "words": [list(w) for w in words]}))
    else:
        for w in words:
            print(w)
    return OK


def cmd_dyck_filter(args):
    c = _dyck_content(args)

    def go(text):
        w = gen.IntWord(c, _ints(text))
        ok = gen.is_dyck(w)
        return (str(w) if ok else None), {"input": list(w), "dyck": ok}

    code = OK
    for text in _inputs(args.words):
        try:
            out, obj = go(text)
        except ValueError as e:
            print(f"error: {text!r}: {e}", file=sys.stderr)
            code = DOMAIN
            continue
        if args.json:
            print(json.dumps(obj))
        elif out is not None:
            print(out)
    return code


# -- scheduling -----------------------------------------------------------------------

def _lengths(args, text):
    return tuple(parse_letters(text, args.hours))


def cmd_schedule_latest(args):
    def go(text):
        s = sch.schedule_latest(args.hours, _lengths(args, text))
        return _fmt_ints(s.starts), s.to_dict(successful=True)
    return _each(args, go)


def cmd_schedule_all(args):
    def go(text):
        out, objs = [], []
        for s in sch.schedule_all(args.hours, _lengths(args, text)):
            ok, _ = sch.inspector_check(s)
            out.append(_fmt_ints(s.starts) + ("  successful" if ok else ""))
            objs.append(s.to_dict(successful=ok))
        return "\n".join(out), objs
    return _each(args, go)


def cmd_schedule_check(args):
    def go(text):
        s = sch.Schedule(args.hours, _lengths(args, text), _ints(args.starts))
        ok, trace = sch.inspector_check(s)
        if ok:
            out = f"successful; watch order {_fmt_ints(trace)}"
        else:
            out = f"unsuccessful; inspector waits after {_fmt_ints(trace) or 'nothing'}"
        return out, s.to_dict(successful=ok) | {"trace": list(trace)}
    return _each(args, go)


# -- verification ---------------------------------------------------------------------

def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    return range(int(lo), int(hi if sep else lo) + 1)


def _report(args, rep) -> int:
    print(rep.to_json() if args.json else rep.to_text())
    return OK if rep.passed else INVARIANT


def _verify_mn(args, fn):
    rep = None
    for n in _range(args.length):
        r = fn(args.mod, n, budget=args.budget)
        rep = r if rep is None else rep.merge(r)
    return _report(args, rep)


def cmd_verify_bijective(args):
    return _verify_mn(args, oracle.verify_sweep_bijective)


def cmd_verify_theorems(args):
    return _verify_mn(args, oracle.verify_theorems)


def cmd_verify_zeta(args):
    pairs = []
    for item in args.params:
        a, b = _ints(item)
        pairs.append((a, b))
    return _report(args, oracle.verify_zeta(pairs, budget=args.budget))


# -- parser ---------------------------------------------------------------------------

def _content_arg(text: str) -> gen.Content:
    try:
        return gen.Content.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sweepmap", description="Sweep maps, equitable partitions and the zeta map.")
    ap.add_argument("--json", action="store_true", help="machine-readable output (one JSON document per input)")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    words = argparse.ArgumentParser(add_help=False, parents=[common])
    words.add_argument("words", nargs="+", metavar="WORD", help="input words; '-' reads one per line from stdin")

    mod = argparse.ArgumentParser(add_help=False, parents=[words])
    mod.add_argument("-m", "--mod", type=int, required=True, help="modulus m")
    mod.add_argument("--pretty", action="store_true", help="show empty blocks as '·'")

    def add(name, fn, parents, help, **kw):
        p = sub.add_parser(name, parents=parents, help=help, **kw)
        p.set_defaults(func=fn)
        return p

    add("sweep", cmd_sweep, [mod], "modular sweep map")
    add("unsweep", cmd_unsweep, [mod], "inverse modular sweep map")
    add("presweep", cmd_presweep, [mod], "partitioned word of levels")
    p = add("unpresweep", cmd_unpresweep, [mod], "inverse presweep of a partitioned word")
    p.add_argument("--trace", action="store_true")
    p = add("rightmost", cmd_rightmost, [mod], "rightmost equitable partition")
    p.add_argument("--trace", action="store_true")
    p = add("leftmost", cmd_leftmost, [mod], "leftmost equitable partition")
    p.add_argument("--trace", action="store_true")
    p = add("successful", cmd_successful, [mod], "successful partition by residue shifting")
    p.add_argument("--from", dest="start", help="equitable start partition (default: leftmost)")
    p.add_argument("--trace", action="store_true")
    p = add("lattice", cmd_lattice, [mod], "lattice of equitable partitions")
    p.add_argument("--dot", action="store_true", help="Graphviz output")
    p = add("array", cmd_array, [mod], "balancing array of a partitioned word (or of rightmost(word))")
    p.add_argument("--ascii", action="store_true", help="use '#' and '.' instead of '■' and '·'")

    content = argparse.ArgumentParser(add_help=False, parents=[words])
    content.add_argument("--content", type=_content_arg, required=True, help="e.g. 3:2,-2:3")
    add("zsweep", cmd_zsweep, [content], "sweep map on integer words")
    add("unzsweep", cmd_unzsweep, [content], "inverse sweep on integer words")

    ab = argparse.ArgumentParser(add_help=False, parents=[words])
    ab.add_argument("--a", type=int, required=True)
    ab.add_argument("--b", type=int, required=True)
    add("zeta", cmd_zeta, [ab], "zeta map on D_{a,b}")
    add("unzeta", cmd_zeta, [ab], "inverse zeta map")

    dyck = sub.add_parser("dyck", help="Dyck words").add_subparsers(dest="mode", required=True, metavar="mode")
    dsel = argparse.ArgumentParser(add_help=False, parents=[common])
    dsel.add_argument("--content", type=_content_arg)
    dsel.add_argument("--a", type=int)
    dsel.add_argument("--b", type=int)
    dyck.add_parser("enumerate", parents=[dsel], help="list every Dyck word").set_defaults(func=cmd_dyck_enumerate)
    p = dyck.add_parser("filter", parents=[dsel], help="keep the inputs that are Dyck words")
    p.add_argument("words", nargs="+", metavar="WORD")
    p.set_defaults(func=cmd_dyck_filter)

    sched = sub.add_parser("schedule", help="task scheduling").add_subparsers(dest="mode", required=True, metavar="mode")
    hours = argparse.ArgumentParser(add_help=False, parents=[words])
    hours.add_argument("--hours", type=int, required=True)
    sched.add_parser("latest", parents=[hours], help="latest equitable schedule").set_defaults(func=cmd_schedule_latest)
    sched.add_parser("all", parents=[hours], help="every equitable schedule").set_defaults(func=cmd_schedule_all)
    p = sched.add_parser("check", parents=[hours], help="inspector check of a schedule")
    p.add_argument("--starts", required=True, help="start hours, e.g. 1,2,2,4,5,5,5")
    p.set_defaults(func=cmd_schedule_check)

    ver = sub.add_parser("verify", help="exhaustive checks").add_subparsers(dest="mode", required=True, metavar="mode")
    budget = argparse.ArgumentParser(add_help=False, parents=[common])
    budget.add_argument("--budget", type=int, default=oracle.DEFAULT_WORD_BUDGET)
    mn = argparse.ArgumentParser(add_help=False, parents=[budget])
    mn.add_argument("-m", "--mod", type=int, required=True)
    mn.add_argument("-n", "--length", required=True, help="word length N or a range like 2..5")
    ver.add_parser("bijective", parents=[mn], help="sweep is a bijection").set_defaults(func=cmd_verify_bijective)
    ver.add_parser("theorems", parents=[mn], help="equitable-partition theorems").set_defaults(
        func=cmd_verify_theorems)
    p = ver.add_parser("zeta", parents=[budget], help="zeta-map claims")
    p.add_argument("params", nargs="+", metavar="A,B", help="parameter pairs such as 3,-2")
    p.set_defaults(func=cmd_verify_zeta)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE
    try:
        return args.func(args)
    except InvariantViolation as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return INVARIANT
    except (ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return DOMAIN


def run(argv) -> tuple[int, str]:
    """Run one invocation in-process; returns (exit status, stdout text)."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
