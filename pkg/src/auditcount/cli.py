"""auditcount command line: count, audit, exact, encode, bench.

Exit codes: 0 ok or verified, 1 usage or input error, 2 oracle incomplete,
3 rejected (or a failed bench invariant).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .auditors import audit, complexity_csv, complexity_violations, measure_audit_complexity
from .corpus import corpus_dir, load_corpus, random_formula
from .counters import (CertificateError, RetryExhausted, count, read_certificate,
                       write_certificate)
from .encoder import (EncodingError, VarBudget, build_cells, build_holes, build_stock,
                      build_stock_audit, to_qdimacs)
from .formula import (DimacsError, EnumerationBudgetExceeded, copies_for, exact_count,
                      make_copies, read_dimacs)
from .oracle import (COMPLETE_REQUIRED, RANDOMIZED_ACCEPTED, SOLVER_ENV, OracleConfig,
                     OracleError, OracleIncomplete)

EXIT_OK, EXIT_INPUT, EXIT_INCOMPLETE, EXIT_REJECTED = 0, 1, 2, 3
BENCH_SIZES = (8, 12, 16)


class InputError(Exception):
    pass


def _oracle_config(args) -> OracleConfig:
    spec = args.oracle
    backend, path = "semantic", None
    if spec.startswith("external"):
        backend = "external"
        path = spec.partition(":")[2] or os.environ.get(SOLVER_ENV)
        if not path:
            raise InputError(f"--oracle external needs a path or ${SOLVER_ENV}")
    elif spec != "semantic":
        raise InputError(f"unknown oracle {spec!r}")
    try:
        return OracleConfig(backend=backend, solver_path=path, seed=args.seed, trials=args.trials,
                            false_policy=args.false_policy, enum_budget=args.max_enum,
                            timeout_s=args.timeout_s)
    except ValueError as e:
        raise InputError(str(e)) from None


def _read_formula(path: str):
    if not path:
        raise InputError("missing -i/--input")
    try:
        return read_dimacs(path)
    except FileNotFoundError:
        raise InputError(f"input file not found: {path}") from None
    except (DimacsError, ValueError) as e:
        raise InputError(f"{path}: {e}") from None


def _read_bytes(path: str, what: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except FileNotFoundError:
        raise InputError(f"{what} not found: {path}") from None


def cmd_count(args) -> int:
    f = _read_formula(args.input)
    cfg = _oracle_config(args)
    kw = {"ell_base": args.ell_base} if args.alg == "cells" else {}
    try:
        res = count(f, args.alg, cfg, **kw)
    except RetryExhausted as e:
        print(f"incomplete: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except OracleIncomplete as e:
        print(f"incomplete: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except (ValueError, EnumerationBudgetExceeded) as e:
        raise InputError(str(e)) from None
    est = res.estimate
    print(f"estimate {est.decimal} = {est} ({res.algorithm}, {res.path}, oracle {res.mode})")
    cert = res.certificate
    if cert is not None:
        print("params " + " ".join(f"{k}={v}" for k, v in cert.params().items()))
        if args.cert:
            Path(args.cert).write_bytes(write_certificate(cert))
            print(f"certificate {args.cert}")
    elif args.cert:
        print(f"no certificate ({res.path} path)")
    return EXIT_OK


def cmd_audit(args) -> int:
    f = _read_formula(args.input)
    if not args.cert:
        raise InputError("missing --cert")
    data = _read_bytes(args.cert, "certificate")
    cfg = _oracle_config(args)
    try:
        cert = read_certificate(data)
    except CertificateError as e:
        print(f"Rejected: malformed certificate: {e}")
        return EXIT_REJECTED
    rep = audit(f, cert, cfg)
    print(rep.verdict + (f": {rep.reason}" if rep.reason else ""))
    if rep.implied_bounds:
        lo, hi = rep.implied_bounds
        print(f"implied bounds on |sol(F')| (copies={rep.copies}): [{lo}, {hi}]")
    if rep.query_vars is not None:
        print(f"query_vars {rep.query_vars.total} (conp {rep.conp_vars}, combined {rep.combined_vars})")
    print(f"oracle {rep.mode}")
    if args.out:
        Path(args.out).write_bytes(rep.to_json())
    return EXIT_OK if rep.verified else EXIT_REJECTED


def cmd_exact(args) -> int:
    f = _read_formula(args.input)
    try:
        print(exact_count(f, budget=args.max_enum))
    except EnumerationBudgetExceeded as e:
        raise InputError(str(e)) from None
    return EXIT_OK


def _encode_formula(args, f):
    fam = args.family
    cert = None
    if args.witness:
        try:
            cert = read_certificate(_read_bytes(args.witness, "witness"), f)
        except CertificateError as e:
            raise InputError(f"witness: {e}") from None
    copies = args.copies
    if cert is not None:
        copies = cert.copies
    elif copies == "auto":
        copies = copies_for(f.num_vars)
    fp = make_copies(f, int(copies)) if int(copies) > 1 else f
    m = args.m
    if fam == "stock":
        hashes = None
        if cert is not None:
            hashes = getattr(cert, "hashes_stock", None) or getattr(cert, "hashes", None)
            m = m or len(hashes)
        return build_stock(fp, _need_m(m), hashes)
    if fam == "holes":
        hashes = None
        if cert is not None:
            hashes = getattr(cert, "hashes_holes", None)
            m = cert.c_low if m is None else m
        return build_holes(fp, _need_m(m), hashes)
    if fam == "cells":
        ell = args.ell_base if args.ell_base else 1024 * f.num_vars
        hashes = None
        if cert is not None:
            hashes, m, ell = cert.hashes, cert.m, cert.ell
        return build_cells(fp, _need_m(m), ell, 16 * ell, hashes)
    if fam == "stock-audit":
        if cert is None:
            raise InputError("stock-audit needs --witness")
        hashes = getattr(cert, "hashes_stock", None) or cert.hashes
        return build_stock_audit(fp, len(hashes), hashes)
    raise InputError(f"unknown family {fam!r}")


def _need_m(m: Optional[int]) -> int:
    if m is None:
        raise InputError("missing -m")
    return m


def cmd_encode(args) -> int:
    f = _read_formula(args.input)
    try:
        q = _encode_formula(args, f)
    except (EncodingError, AttributeError, TypeError) as e:
        raise InputError(f"cannot encode: {e}") from None
    if args.out:
        Path(args.out).write_bytes(to_qdimacs(q))
    print(VarBudget.CSV_HEADER)
    print(q.budget.csv_row())
    return EXIT_OK


def cmd_bench(args) -> int:
    directory = Path(args.corpus) if args.corpus else corpus_dir()
    formulas = [e.formula for e in load_corpus(directory)] if directory.is_dir() else []
    if not formulas:
        print(f"empty corpus: {directory}", file=sys.stderr)
        return EXIT_INPUT
    sizes = [int(s) for s in args.sizes.split(",") if s] if args.sizes else list(BENCH_SIZES)
    formulas += [random_formula(n, 4 * n, args.seed + n) for n in sizes]
    ns_seen = set()
    unique = []
    for f in sorted(formulas, key=lambda g: g.num_vars):
        # rows depend only on n, so one formula per size is enough
        if f.num_vars not in ns_seen:
            ns_seen.add(f.num_vars)
            unique.append(f)
    rows = measure_audit_complexity(unique, ell_base=args.ell_base or 2)
    csv = complexity_csv(rows)
    if args.out:
        Path(args.out).write_text(csv)
    else:
        sys.stdout.write(csv)
    problems = complexity_violations(rows, args.ell_base or 2)
    for p in problems:
        print(f"invariant failed: {p}", file=sys.stderr)
    return EXIT_REJECTED if problems else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="auditcount", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def oracle_flags(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=64)
        sp.add_argument("--oracle", default="semantic", help="semantic or external:PATH")
        sp.add_argument("--timeout-s", type=float, default=60.0)
        sp.add_argument("--max-enum", type=int, default=24, help="log2 of the enumeration budget")
        sp.add_argument("--false-policy", choices=(RANDOMIZED_ACCEPTED, COMPLETE_REQUIRED),
                        default=RANDOMIZED_ACCEPTED)

    sp = sub.add_parser("count", help="run a counter and write its certificate")
    sp.add_argument("-i", "--input")
    sp.add_argument("--alg", choices=("stock", "cells", "af"), default="af")
    sp.add_argument("--cert")
    sp.add_argument("--ell-base", type=int)
    oracle_flags(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("audit", help="audit a certificate against a formula")
    sp.add_argument("-i", "--input")
    sp.add_argument("--cert")
    sp.add_argument("--out", help="write the audit report as JSON")
    oracle_flags(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("exact", help="exact model count by enumeration")
    sp.add_argument("-i", "--input")
    sp.add_argument("--max-enum", type=int, default=24)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("encode", help="emit a quantified formula as QDIMACS")
    sp.add_argument("-i", "--input")
    sp.add_argument("--family", choices=("stock", "holes", "cells", "stock-audit"), required=True)
    sp.add_argument("-m", type=int)
    sp.add_argument("--witness", help="certificate whose hashes are substituted")
    sp.add_argument("--copies", default="1", help="copies of F to encode over, or 'auto'")
    sp.add_argument("--ell-base", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("bench", help="audit-complexity table")
    sp.add_argument("--corpus", help="directory of .cnf files (default: built-in corpus)")
    sp.add_argument("--sizes", help="extra formula sizes, comma separated (default 8,12,16)")
    sp.add_argument("--ell-base", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OracleIncomplete as e:
        print(f"incomplete: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except OracleError as e:
        print(f"oracle error: {e}", file=sys.stderr)
        return EXIT_INCOMPLETE


if __name__ == "__main__":
    sys.exit(main())
