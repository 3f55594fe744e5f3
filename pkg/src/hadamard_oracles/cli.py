"""Command-line front end.

Exit codes: 0 success or pass, 1 verification or test failure, 2 usage or
I/O error.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bitstream, constructions, extraction, matcore, schwinger, search
from .quantum_sim import GapSourceConfig, Model, sample_bits

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

IDENTITY = "identity"


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_bytes(text.encode("utf-8"))


def _report(report: matcore.TestReport) -> int:
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.construction == "sylvester":
        text = matcore.format_smat(constructions.sylvester(args.k))
    elif args.construction == "paley":
        text = matcore.format_smat(constructions.paley(args.q))
    else:
        text = matcore.format_pmat(schwinger.schwinger_basis(args.n))
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.check == "hadamard":
        m = matcore.read_matrix(args.file)
        if isinstance(m, matcore.SignMatrix):
            ok = constructions.is_hadamard(m)
            kind = "real"
        else:
            ok = schwinger.is_complex_hadamard(m)
            kind = "complex"
        return _report(matcore.TestReport("hadamard", ok, summary={"order": m.n, "kind": kind}))

    def load(name: str):
        if name == IDENTITY:
            return None
        m = matcore.read_matrix(name)
        return matcore.sign_to_phase(m) if isinstance(m, matcore.SignMatrix) else m

    a, b = load(args.a), load(args.b)
    if a is None and b is None:
        raise UsageError("at least one basis must be a matrix file")
    n = (a or b).n
    a = schwinger.identity_basis(n) if a is None else a
    b = schwinger.identity_basis(n) if b is None else b
    return _report(schwinger.unbiased_check(a, b))


def cmd_search(args) -> int:
    if args.count:
        print(f"count: {search.count_normalized(args.order, workers=args.workers)}")
        return EXIT_OK
    result = search.search_existence(args.order, workers=args.workers)
    out = [f"outcome: {result.outcome.value}"]
    if result.matrix is not None:
        out.append(matcore.format_smat(result.matrix).rstrip("\n"))
    out.append(f"nodes: {result.nodes_explored}")
    out.append(f"elapsed_ms: {result.elapsed * 1000:.3f}")
    print("\n".join(out))
    return EXIT_OK if result.outcome is search.Outcome.FOUND else EXIT_FAIL


def cmd_sim(args) -> int:
    model = {m.value: m for m in Model}[args.model]
    if model is Model.BEAMSPLITTER:
        if args.bias is not None:
            raise UsageError("--bias does not apply to the beamsplitter model")
        cfg = GapSourceConfig(model, args.seed, args.bits, n=args.n or 2, input_port=args.port or 0)
    else:
        if args.n is not None or args.port is not None:
            raise UsageError(f"--n/--port do not apply to the {args.model} model")
        cfg = GapSourceConfig(model, args.seed, args.bits, p=0.5 if args.bias is None else args.bias)
    s = sample_bits(cfg)
    if args.binary:
        s = bitstream.to_binary(s)
    _emit(bitstream.format_stream(s), args.out)
    return EXIT_OK


def cmd_extract(args) -> int:
    source = bitstream.read_stream(args.input)
    s = extraction.von_neumann_extract(source)
    bitstream.write_stream(args.output, s)
    print(f"input_bits: {len(source)}\noutput_bits: {len(s)}")
    return EXIT_OK


def cmd_test(args) -> int:
    s = bitstream.read_stream(args.file)
    if args.test == "borel":
        return _report(extraction.borel_normality_test(s))
    return _report(extraction.monobit_summary(s))


def cmd_explore(args) -> int:
    sys.stdout.write(schwinger.dita_explore(args.n).to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hadamard-oracles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a Hadamard matrix file")
    gsub = gen.add_subparsers(dest="construction", required=True)
    for name, flag, help_ in [
        ("sylvester", "--k", "order 2**K"),
        ("paley", "--q", "prime Q = 3 mod 4, order Q+1"),
        ("schwinger", "--n", "order N complex Hadamard"),
    ]:
        g = gsub.add_parser(name)
        g.add_argument(flag, type=int, required=True, help=help_)
        g.add_argument("-o", "--out", help="output path (default: stdout)")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check a matrix file")
    vsub = ver.add_subparsers(dest="check", required=True)
    vh = vsub.add_parser("hadamard")
    vh.add_argument("file")
    vu = vsub.add_parser("unbiased")
    vu.add_argument("a", help=f".pmat/.smat path or '{IDENTITY}'")
    vu.add_argument("b", help=f".pmat/.smat path or '{IDENTITY}'")
    ver.set_defaults(func=cmd_verify)

    se = sub.add_parser("search", help="backtracking search for a normalized Hadamard matrix")
    se.add_argument("--order", type=int, required=True)
    se.add_argument("--count", action="store_true", help="count normalized matrices instead")
    se.add_argument("--workers", type=int, default=1)
    se.set_defaults(func=cmd_search)

    sim = sub.add_parser("sim", help="sample a simulated gap source")
    sim.add_argument("--model", choices=[m.value for m in Model], required=True)
    sim.add_argument("--n", type=int, help="beam splitter port count")
    sim.add_argument("--port", type=int, help="beam splitter input port")
    sim.add_argument("--bias", type=float, help="probability of a 1 (symmetry, emission)")
    sim.add_argument("--bits", type=int, required=True, help="number of outcomes")
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--binary", action="store_true",
                     help="expand port symbols to bits (power-of-two N only)")
    sim.add_argument("-o", "--out", help="output path (default: stdout)")
    sim.set_defaults(func=cmd_sim)

    ex = sub.add_parser("extract", help="randomness extraction")
    exsub = ex.add_subparsers(dest="extractor", required=True)
    vn = exsub.add_parser("vonneumann")
    vn.add_argument("input")
    vn.add_argument("output")
    ex.set_defaults(func=cmd_extract)

    te = sub.add_parser("test", help="statistical tests on a bit stream")
    tsub = te.add_subparsers(dest="test", required=True)
    for name in ("borel", "monobit"):
        tsub.add_parser(name).add_argument("file")
    te.set_defaults(func=cmd_test)

    exp = sub.add_parser("explore", help="experimental explorers")
    esub = exp.add_subparsers(dest="explorer", required=True)
    ed = esub.add_parser("dita")
    ed.add_argument("--n", type=int, required=True, choices=[2, 4])
    exp.set_defaults(func=cmd_explore)
    return p


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        # FormatError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
