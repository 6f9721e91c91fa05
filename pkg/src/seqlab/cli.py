"""Command-line workbench: ``seqlab <subcommand> ...``.

Exit codes: 0 success or verification pass, 1 verification mismatch,
2 usage error, 3 runtime error. Errors print one ``error: <reason>: <detail>``
line on stderr; progress for long searches also goes to stderr.
"""
import argparse
import contextlib
import json
import sys
import time

from . import (angelini, curling, digitgames, duplication, harness, lagarias, quet,
               registry, torus_tsp)
from .errors import SeqlabError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2, 3
PROGRESS_INTERVAL = 2.0
# execution options; kept out of the parameter echo so output is the same
# whatever the pool size
_EXEC_OPTIONS = {"format", "threads", "timing", "command", "handler"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"error: usage: {message}\n")


class Progress:
    """Rate-limited progress lines on stderr."""

    def __init__(self, label, stream):
        self.label = label
        self.stream = stream
        self.last = time.monotonic()

    def __call__(self, done, total):
        now = time.monotonic()
        if now - self.last >= PROGRESS_INTERVAL:
            self.last = now
            print(f"progress: {self.label} {done}/{total}", file=self.stream, flush=True)


# --- subcommand handlers --------------------------------------------------
# each returns (result payload, text lines, exit code)


def _beastly(a, ctx):
    terms = digitgames.beastly_prefix(a.count)
    return terms, [str(t) for t in terms], EXIT_OK


def _lychrel(a, ctx):
    traj = digitgames.palindrome_trajectory(a.n, a.cap)
    result = -1 if traj.resolved is None else traj.resolved
    payload = {"start": a.n, "status": traj.status, "result": result,
               "steps": len(traj.iterates) - 1, "iterates": list(traj.iterates)}
    lines = [f"start {a.n}", f"status {traj.status}", f"result {result}",
             f"steps {payload['steps']}"]
    return payload, lines, EXIT_OK


def _trajectory196(a, ctx):
    its = digitgames.trajectory_196(a.steps)
    return its, [str(t) for t in its], EXIT_OK


def _angelini(a, ctx):
    table = angelini.load_table(a.table) if a.table else None
    terms = angelini.generate(a.seed, a.count, table)
    return terms, [str(t) for t in terms], EXIT_OK


def _persistence(a, ctx):
    if (a.n is None) == (a.smallest is None):
        raise UsageError("give either N or --smallest P")
    if a.smallest is not None:
        n = digitgames.smallest_with_persistence(a.smallest)
        return {"persistence": a.smallest, "smallest": n}, [str(n)], EXIT_OK
    p = digitgames.persistence(a.n)
    return {"n": a.n, "persistence": p}, [str(p)], EXIT_OK


def _powertrain(a, ctx):
    if (a.n is None) == (a.fixed_points is None):
        raise UsageError("give either N or --fixed-points LIMIT")
    if a.fixed_points is not None:
        pts = digitgames.powertrain_fixed_points(
            a.fixed_points, workers=ctx["threads"], progress=ctx["progress"]("powertrain"))
        return pts, [str(p) for p in pts], EXIT_OK
    v = digitgames.powertrain(a.n)
    return {"n": a.n, "powertrain": v, "fixed": v == a.n}, [str(v)], EXIT_OK


def _dup123(a, ctx):
    report = ctx["progress"]("dup123")
    counts = duplication.reachable_counts(
        a.seed, a.max_len, progress=lambda length, c: report(length, a.max_len))
    lengths = range(len(a.seed), a.max_len + 1)
    if a.dump_length is not None:
        if not a.dump_file:
            raise UsageError("--dump-length needs --dump-file")
        duplication.dump_level(a.seed, a.dump_length, a.dump_file)
    payload = [{"length": L, "count": c} for L, c in zip(lengths, counts)]
    return payload, [f"{L} {c}" for L, c in zip(lengths, counts)], EXIT_OK


def _gijswijt(a, ctx):
    terms = curling.gijswijt_prefix(a.count)
    return terms, [str(t) for t in terms], EXIT_OK


def _parse_curl_string(text):
    parts = text.split(",") if "," in text else list(text)
    try:
        syms = [int(p) for p in parts if p.strip()]
    except ValueError:
        raise UsageError(f"bad curling string {text!r}") from None
    if not syms or min(syms) < 1:
        raise UsageError("curling string needs positive symbols")
    return syms


def _curling(a, ctx):
    syms = _parse_curl_string(a.string)
    k = curling.curling_number(syms)
    payload = {"string": syms, "curling_number": k}
    lines = [str(k)]
    if a.extend:
        tr = curling.extend_until_one(syms, a.cap)
        payload.update(tail_length=tr.tail_length, extended=list(tr.extended))
        lines = [f"curling_number {k}", f"tail_length {tr.tail_length}",
                 "extended " + ",".join(map(str, tr.extended))]
    return payload, lines, EXIT_OK


def _best_tail(a, ctx):
    best, witness = curling.best_tail(a.n, workers=ctx["threads"], checkpoint=a.checkpoint,
                                      progress=ctx["progress"]("best-tail"))
    w = "".join(map(str, witness))
    return {"n": a.n, "best_tail": best, "witness": witness}, [f"{a.n} {best} {w}"], EXIT_OK


def _quet(a, ctx):
    if (a.count is None) == (a.small_indices is None):
        raise UsageError("give either --count K or --small-indices LIMIT")
    if a.count is not None:
        terms = quet.quet_prefix(a.count)
    else:
        terms = quet.small_indices(a.small_indices)
    return terms, [str(t) for t in terms], EXIT_OK


def _tsp(a, ctx):
    est = torus_tsp.estimate_L(a.n, a.trials, a.rng_seed, workers=ctx["threads"],
                               progress=ctx["progress"]("tsp"))
    d = est.as_dict()
    return d, [f"{k} {v!r}" if isinstance(v, float) else f"{k} {v}" for k, v in d.items()], EXIT_OK


def _lagarias(a, ctx):
    if (a.count is None) == (a.check is None):
        raise UsageError("give either --count K or --check LIMIT")
    if a.count is not None:
        terms = lagarias.a057641_prefix(a.count)
        return terms, [str(t) for t in terms], EXIT_OK
    hit = lagarias.check_nonnegative(a.check, workers=ctx["threads"],
                                     progress=ctx["progress"]("lagarias"))
    payload = {"limit": a.check, "first_violation": hit}
    return payload, [f"first_violation {'none' if hit is None else hit}"], EXIT_OK


def _verify(a, ctx):
    a_number = a.a_number.upper()
    if not harness.A_NUMBER.match(a_number):
        raise UsageError(f"not an A-number: {a.a_number}")
    if a.fixture:
        fixture = harness.load_bfile(a.fixture, a_number)
    elif a.fetch:
        fixture = harness.fetch_bfile(a_number, harness.CachePolicy.from_env(allow_network=True))
    else:
        fixture = harness.load_fixture(a_number)
    count = min(a.count, len(fixture.terms))
    if a_number not in registry.GENERATORS:
        raise UsageError(f"no generator for {a_number}")
    generated = registry.generate(a_number, fixture.offset, count, workers=ctx["threads"])
    report = harness.verify(a_number, generated, fixture)
    mm = report.first_mismatch
    line = f"{a_number} {report.status} compared={report.compared}"
    if mm:
        line += f" first_mismatch=index:{mm[0]} expected:{mm[1]} actual:{mm[2]}"
    code = EXIT_OK if report.status == "pass" else EXIT_MISMATCH
    return report.as_dict(), [line], code


# --- parser ---------------------------------------------------------------


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _natural(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker threads for partitioned searches")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="add elapsed seconds to the JSON envelope")

    parser = _Parser(prog="seqlab", parents=[common],
                                     description="Generate, search and verify integer sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("beastly", _beastly, "numbers containing 666 (A051003)")
    p.add_argument("--count", type=_natural, required=True)

    p = add("lychrel", _lychrel, "reverse-and-add until a palindrome")
    p.add_argument("n", type=_natural)
    p.add_argument("--cap", type=_positive, default=digitgames.DEFAULT_LYCHREL_CAP)

    p = add("trajectory196", _trajectory196, "reverse-and-add iterates of 196 (A006960)")
    p.add_argument("--steps", type=_natural, required=True)

    p = add("angelini", _angelini, "self-describing letter-difference sequence (A131744)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--table", help="language table file")

    p = add("persistence", _persistence, "multiplicative persistence (A003001)")
    p.add_argument("n", type=_natural, nargs="?")
    p.add_argument("--smallest", type=_natural)

    p = add("powertrain", _powertrain, "Conway's powertrain map (A135385)")
    p.add_argument("n", type=_natural, nargs="?")
    p.add_argument("--fixed-points", type=_natural)

    p = add("dup123", _dup123, "substring-duplication closure counts (A135473)")
    p.add_argument("--seed", default="123")
    p.add_argument("--max-len", type=_positive, required=True)
    p.add_argument("--dump-length", type=_positive)
    p.add_argument("--dump-file")

    p = add("gijswijt", _gijswijt, "Gijswijt's sequence (A090822)")
    p.add_argument("--count", type=_positive, required=True)

    p = add("curling", _curling, "curling number of a string")
    p.add_argument("string", help="symbols, e.g. 222322 or 2,2,2,3,2,2")
    p.add_argument("--extend", action="store_true", help="append curling numbers until a 1")
    p.add_argument("--cap", type=_positive, default=curling.DEFAULT_STEP_CAP)

    p = add("best-tail", _best_tail, "exhaustive best tail over {2,3}^n (A094004)")
    p.add_argument("n", type=_positive)
    p.add_argument("--checkpoint")

    p = add("quet", _quet, "prime recurrence (A134204) and its small indices (A133242)")
    p.add_argument("--count", type=_positive)
    p.add_argument("--small-indices", type=_positive)

    p = add("tsp", _tsp, "Monte Carlo optimal torus tour length, in eels")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--rng-seed", type=_natural, default=0)

    p = add("lagarias", _lagarias, "certified A057641 terms and nonnegativity scan")
    p.add_argument("--count", type=_positive)
    p.add_argument("--check", type=_positive)

    p = add("verify", _verify, "compare a generator with a b-file fixture")
    p.add_argument("a_number")
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--fetch", action="store_true", help="fetch the b-file (cached)")
    p.add_argument("--fixture", help="compare against this local b-file instead")
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    fmt = getattr(args, "format", "text")
    ctx = {
        "threads": getattr(args, "threads", 1),
        "progress": lambda label: Progress(label, err),
    }
    start = time.perf_counter()
    try:
        payload, lines, code = args.handler(args, ctx)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=err)
        return EXIT_USAGE
    except SeqlabError as exc:
        print(f"error: {exc.reason}: {exc}", file=err)
        return EXIT_RUNTIME
    except (ValueError, KeyError) as exc:
        print(f"error: invalid-argument: {exc}", file=err)
        return EXIT_USAGE
    if fmt == "json":
        params = {k: v for k, v in vars(args).items() if k not in _EXEC_OPTIONS}
        doc = {"command": args.command, "parameters": params, "result": payload}
        if getattr(args, "timing", False):
            doc["elapsed"] = time.perf_counter() - start
        out.write(json.dumps(doc) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
