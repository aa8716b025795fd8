"""Command-line interface.

Exit codes: 0 success, 1 usage/parameter/parse error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .equivalence import compare_spectra, normalize, sign_spectrum, strict_normalize
from .errors import ContractError, HadamardError, ParameterError, VerificationError
from .matrix_file import MatrixFile, read_matrix, render_json, render_text
from .sign_matrix import is_conference, is_hadamard

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

CLI_METHODS = [m.replace("_", "-") for m in C.METHODS]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _report(fields: dict) -> str:
    base = {k: fields.get(k) for k in ("order", "method", "params", "verdict", "spectra")}
    base.update({k: v for k, v in fields.items() if k not in base})
    return json.dumps(base, indent=2, ensure_ascii=False)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError(f"method {args.method} requires {', '.join(missing)}")


def _default_seed(n: int):
    if n < 1 or n & (n - 1):
        raise ParameterError(f"no built-in seed of order {n}; pass --seed FILE")
    m = n.bit_length() - 1
    return C.sylvester(m), str(C.sylvester_recipe(m))


def _load_seed(path):
    mf = read_matrix(path)
    if not is_hadamard(mf.matrix):
        raise ParameterError(f"seed file {path} is not a Hadamard matrix")
    desc = "supplied" if mf.method is None else f"supplied {mf.method}"
    return mf.matrix, desc


def _seeds(args, count: int):
    files = args.seed or []
    if len(files) > count:
        raise ParameterError(f"method {args.method} takes at most {count} --seed file(s)")
    if count == 2 and len(files) != 2:
        raise ParameterError("method kronecker requires two --seed files")
    if files:
        return [_load_seed(p) for p in files]
    return [_default_seed(args.n)]


def _construct(args) -> MatrixFile:
    method = args.method.replace("-", "_")
    if method == "sylvester":
        _require(args, "m")
        return MatrixFile(C.sylvester(args.m), args.method, {"m": args.m})
    if method == "paley1":
        _require(args, "q")
        return MatrixFile(C.paley1(args.q), args.method, {"q": args.q})
    if method == "paley2":
        _require(args, "q")
        return MatrixFile(C.paley2(args.q), args.method, {"q": args.q})
    if method == "ext_paley2":
        _require(args, "q")
        k = 0 if args.k is None else args.k
        M = C.ext_paley2(args.q, k, args.sign)
        return MatrixFile(M, args.method, {"q": args.q, "k": k, "sign": args.sign})
    if method == "ext_paley1":
        _require(args, "q")
        (seed, desc), = _seeds(args, 1)
        M = C.ext_paley1(args.q, seed)
        return MatrixFile(M, args.method, {"q": args.q, "n": seed.shape[0], "seed": desc})
    if method == "twin_prime":
        _require(args, "p")
        q = args.p + 2 if args.q is None else args.q
        (seed, desc), = _seeds(args, 1)
        M = C.twin_prime_construction(args.p, q, seed)
        return MatrixFile(M, args.method, {"p": args.p, "q": q, "n": seed.shape[0], "seed": desc})
    (a, da), (b, db) = _seeds(args, 2)
    return MatrixFile(C.kronecker(a, b), args.method, {"seed": da, "seed2": db})


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_construct(args) -> int:
    mf = _construct(args)
    text = render_json(mf, "HADAMARD") if args.format == "json" else render_text(mf)
    _write(text, args.out)
    return EXIT_OK


def _verdict(M) -> str:
    if is_hadamard(M):
        return "HADAMARD"
    if is_conference(M):
        return "CONFERENCE"
    return "NOT HADAMARD"


def cmd_verify(args) -> int:
    mf = read_matrix(args.path)
    verdict = _verdict(mf.matrix)
    if args.format == "json":
        print(_report({"order": mf.order, "method": mf.method, "params": mf.params or None, "verdict": verdict}))
    else:
        print(f"order {mf.order}: {verdict}")
    return EXIT_VERIFY if verdict == "NOT HADAMARD" else EXIT_OK


def _load_hadamard(path):
    mf = read_matrix(path)
    if not is_hadamard(mf.matrix):
        raise ContractError(f"{path}: not a Hadamard matrix")
    return mf


def cmd_normalize(args) -> int:
    mf = _load_hadamard(args.path)
    M = normalize(mf.matrix) if args.plain else strict_normalize(mf.matrix)
    out = MatrixFile(M, mf.method, mf.params)
    _write(render_json(out, "HADAMARD") if args.format == "json" else render_text(out), args.out)
    return EXIT_OK


def _spectrum_obj(s):
    return {"rows": list(s.row_changes), "cols": list(s.col_changes)}


def _bracket(seq) -> str:
    return "[" + ", ".join(str(x) for x in seq) + "]"


def cmd_spectrum(args) -> int:
    mf = _load_hadamard(args.path)
    s = sign_spectrum(strict_normalize(mf.matrix))
    if args.format == "json":
        print(_report({"order": mf.order, "method": mf.method, "params": mf.params or None,
                       "verdict": "HADAMARD", "spectra": _spectrum_obj(s)}))
    else:
        print(_bracket(s.row_changes))
        print(_bracket(s.col_changes))
    return EXIT_OK


def cmd_compare(args) -> int:
    a = _load_hadamard(args.path1)
    b = _load_hadamard(args.path2)
    if a.order != b.order:
        raise ParameterError(f"order mismatch: {a.order} vs {b.order}")
    rep = compare_spectra(a.matrix, b.matrix)
    if args.format == "json":
        print(_report({
            "order": a.order,
            "method": [a.method, b.method],
            "params": [a.params or None, b.params or None],
            "verdict": rep.verdict.value,
            "spectra": [_spectrum_obj(s) for s in rep.spectra],
            "spectra_equal": rep.spectra_equal,
        }))
    else:
        print(f"order {a.order}")
        for label, s in zip(("H1", "H2"), rep.spectra):
            print(f"{label} rows {_bracket(s.row_changes)}")
            print(f"{label} cols {_bracket(s.col_changes)}")
        print(f"spectra-equal: {str(rep.spectra_equal).lower()}")
        print(f"verdict: {rep.verdict.value}")
    return EXIT_OK


def cmd_plan(args) -> int:
    recipes = C.plan_order(args.N)
    if args.format == "json":
        print(_report({"order": args.N, "recipes": [str(r) for r in recipes]}))
    else:
        for r in recipes:
            print(r)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hadamard-paley", description="Construct, verify and compare Hadamard matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("construct", cmd_construct, "build a Hadamard matrix")
    p.add_argument("--method", required=True, choices=CLI_METHODS)
    p.add_argument("--m", type=int, help="Sylvester exponent (order 2^m)")
    p.add_argument("--q", type=int, help="odd prime power, or the larger twin prime")
    p.add_argument("--p", type=int, help="smaller twin prime")
    p.add_argument("--k", type=int, help="ext-paley2 exponent (default 0)")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1, help="ext-paley2 sign")
    p.add_argument("--n", type=int, default=1, help="order of the default Sylvester seed")
    p.add_argument("--seed", action="append", metavar="FILE", help="seed matrix file (twice for kronecker)")
    p.add_argument("--out", metavar="FILE")

    p = add("verify", cmd_verify, "check H H^T = nI (or the conference identity)")
    p.add_argument("path")

    p = add("normalize", cmd_normalize, "strictly normalize a Hadamard matrix")
    p.add_argument("path")
    p.add_argument("--plain", action="store_true", help="only make the first row and column +1")
    p.add_argument("--out", metavar="FILE")

    p = add("spectrum", cmd_spectrum, "sign spectrum of the strictly normalized matrix")
    p.add_argument("path")

    p = add("compare", cmd_compare, "compare sign-spectrum sets of two matrices")
    p.add_argument("path1")
    p.add_argument("path2")

    p = add("plan", cmd_plan, "list recipes reaching a given order")
    p.add_argument("N", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or 0
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (HadamardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
