"""Command-line interface.

Exit codes: 0 on success or a positive verdict, 1 on a negative verdict
(not TU, no signing, not regular, not equal, Invalid sum), 2 on parse or
shape errors, 3 when a size guard trips.  Guards can be widened with
``--force`` or the environment variables TUMAT_TU_LIMIT and
TUMAT_EQ_LIMIT.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .documents import (
    DocumentError,
    parse_document,
    parse_standard_repr_document,
    render_matrix_document,
    render_standard_repr_document,
)
from .errors import ShapeError, SizeGuardError
from .matroid import DEFAULT_EQ_LIMIT, LabeledMatrix, matroids_equal, to_matroid
from .stdrepr import StandardRepr, is_regular
from .sums import (
    Sum3Labels,
    canonical_signing_sum3,
    sign_sum_1,
    sign_sum_2,
    standard_repr_sum_1,
    standard_repr_sum_2,
    standard_repr_sum_3,
    verify_is_sum_k_of,
)
from .tu import DEFAULT_TU_LIMIT, find_tu_signing, is_signing_of, is_totally_unimodular

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_GUARD = 3


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DocumentError(f"environment variable {name} must be an integer, got {raw!r}")


def _tu_limit() -> int:
    return _env_int("TUMAT_TU_LIMIT", DEFAULT_TU_LIMIT)


def _eq_limit() -> int:
    return _env_int("TUMAT_EQ_LIMIT", DEFAULT_EQ_LIMIT)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None


def _write_out(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_matrix(path: str) -> LabeledMatrix:
    doc = parse_document(_read(path))
    if isinstance(doc, StandardRepr):
        return doc.to_full()
    return doc


def _load_standard_repr(path: str) -> StandardRepr:
    return parse_standard_repr_document(_read(path))


def _fmt_labels(labels) -> str:
    return "[" + ", ".join(labels) + "]"


def cmd_tu_check(args) -> int:
    m = _load_matrix(args.input)
    verdict = is_totally_unimodular(m.body, limit=_tu_limit(), force=args.force)
    if verdict.is_tu:
        print("TU")
        return EXIT_OK
    rows, cols, det = verdict.witness
    print(
        "not TU: rows "
        + _fmt_labels(m.row_labels[i] for i in rows)
        + " cols "
        + _fmt_labels(m.col_labels[j] for j in cols)
        + f" det {det}"
    )
    return EXIT_NEGATIVE


def cmd_tu_sign(args) -> int:
    m = _load_matrix(args.input)
    if m.kind != "gf2":
        raise ShapeError("tu sign takes a GF(2) document")
    signing = find_tu_signing(m.body, tu_limit=_tu_limit(), force=args.force)
    if signing is None:
        print("no TU signing", file=sys.stderr)
        return EXIT_NEGATIVE
    _write_out(render_matrix_document(LabeledMatrix(m.row_labels, m.col_labels, signing)), args.output)
    return EXIT_OK


def cmd_sum(args) -> int:
    left = _load_standard_repr(args.left)
    right = _load_standard_repr(args.right)
    if args.k == 1:
        outcome = standard_repr_sum_1(left, right)
    elif args.k == 2:
        if args.x is None or args.y is None:
            raise DocumentError("--k 2 needs --x and --y")
        outcome = standard_repr_sum_2(left, right, args.x, args.y)
    else:
        labels = _sum3_labels(args)
        outcome = standard_repr_sum_3(left, right, labels)
    if not outcome.valid:
        print(f"invalid {args.k}-sum [{outcome.reason}]: {outcome.message}", file=sys.stderr)
        return EXIT_NEGATIVE
    _write_out(render_standard_repr_document(outcome.result), args.output)
    return EXIT_OK


def _sum3_labels(args) -> Sum3Labels:
    fields = (args.x0, args.x1, args.x2, args.y0, args.y1, args.y2)
    if any(v is None for v in fields):
        raise DocumentError("--k 3 needs --x0 --x1 --x2 --y0 --y1 --y2")
    return Sum3Labels(*fields)


def cmd_regular_check(args) -> int:
    s = _load_standard_repr(args.input)
    flag, witness = is_regular(s, tu_limit=_tu_limit(), force=args.force)
    if not flag:
        print("not regular")
        return EXIT_NEGATIVE
    print("regular")
    if args.output is not None:
        _write_out(render_matrix_document(witness), args.output)
    return EXIT_OK


def cmd_matroid_info(args) -> int:
    doc = parse_document(_read(args.input))
    rep = doc.to_full() if isinstance(doc, StandardRepr) else doc
    m = to_matroid(rep)
    print(f"elements: {len(m.ground)}")
    print(f"rank: {m.rank}")
    bases = m.bases()
    print(f"bases: {len(bases)}")
    if len(bases) <= args.max_bases:
        for b in bases:
            print("  " + " ".join(b))
    return EXIT_OK


def cmd_matroid_eq(args) -> int:
    reps = []
    for path in (args.left, args.right):
        doc = parse_document(_read(path))
        reps.append(doc.to_full() if isinstance(doc, StandardRepr) else doc)
    if matroids_equal(to_matroid(reps[0]), to_matroid(reps[1]), limit=_eq_limit()):
        print("equal")
        return EXIT_OK
    print("not equal")
    return EXIT_NEGATIVE


def cmd_verify_composition(args) -> int:
    left = _load_standard_repr(args.left)
    right = _load_standard_repr(args.right)
    tu_limit = _tu_limit()
    flag_l, signed_left = is_regular(left, tu_limit=tu_limit, force=args.force)
    if not flag_l:
        print("left summand not regular", file=sys.stderr)
        return EXIT_NEGATIVE
    flag_r, signed_right = is_regular(right, tu_limit=tu_limit, force=args.force)
    if not flag_r:
        print("right summand not regular", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.k == 1:
        outcome = standard_repr_sum_1(left, right)
    elif args.k == 2:
        if args.x is None or args.y is None:
            raise DocumentError("--k 2 needs --x and --y")
        outcome = standard_repr_sum_2(left, right, args.x, args.y)
    else:
        outcome = standard_repr_sum_3(left, right, _sum3_labels(args))
    if not outcome.valid:
        print(f"invalid {args.k}-sum [{outcome.reason}]: {outcome.message}", file=sys.stderr)
        return EXIT_NEGATIVE
    s = outcome.result
    if args.k == 1:
        witness_body = sign_sum_1(signed_left.body, signed_right.body, limit=tu_limit, force=args.force)
    elif args.k == 2:
        xi = signed_left.row_position(args.x)
        r = signed_left.body.row(xi)
        yi = signed_right.col_position(args.y)
        c = signed_right.body.col(yi)
        keep_rows = [i for i in range(signed_left.body.n_rows) if i != xi]
        keep_cols = [j for j in range(signed_right.body.n_cols) if j != yi]
        a_left = signed_left.body.submatrix(keep_rows, range(signed_left.body.n_cols))
        a_right = signed_right.body.submatrix(range(signed_right.body.n_rows), keep_cols)
        witness_body = sign_sum_2(a_left, r, a_right, c, limit=tu_limit, force=args.force)
    else:
        witness = canonical_signing_sum3(
            signed_left, signed_right, _sum3_labels(args), limit=tu_limit, force=args.force
        )
        witness_body = witness.body
    checks_ok = (
        is_totally_unimodular(witness_body, limit=tu_limit, force=args.force).is_tu
        and is_signing_of(witness_body, s.B.body)
        and verify_is_sum_k_of(
            args.k,
            s.to_matroid(),
            left.to_matroid(),
            right.to_matroid(),
            left,
            right,
            x=args.x if args.k == 2 else None,
            y=args.y if args.k == 2 else None,
            labels=_sum3_labels(args) if args.k == 3 else None,
            eq_limit=_eq_limit(),
        )
    )
    if not checks_ok:
        print("composition check failed: witness does not certify the sum", file=sys.stderr)
        return EXIT_NEGATIVE
    print(f"verified {args.k}-sum composition: regular")
    if args.out_dir is not None:
        os.makedirs(args.out_dir, exist_ok=True)
        _write_out(
            render_standard_repr_document(s), os.path.join(args.out_dir, "sum.json")
        )
        _write_out(
            render_matrix_document(LabeledMatrix(s.X, s.Y, witness_body)),
            os.path.join(args.out_dir, "witness.json"),
        )
    return EXIT_OK


def _add_sum_label_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--x", help="glue row label (k=2)")
    p.add_argument("--y", help="glue column label (k=2)")
    for name in ("x0", "x1", "x2", "y0", "y1", "y2"):
        p.add_argument(f"--{name}", help=f"glue label {name} (k=3)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tumat",
        description="Exact tools for totally unimodular matrices, binary matroids, and their sums.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    tu = top.add_parser("tu", help="total unimodularity").add_subparsers(dest="sub", required=True)
    p = tu.add_parser("check", help="check a matrix document for total unimodularity")
    p.add_argument("input")
    p.add_argument("--force", action="store_true", help="lift size guards")
    p.set_defaults(func=cmd_tu_check)
    p = tu.add_parser("sign", help="search for a TU signing of a GF(2) matrix document")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="write the witness here instead of stdout")
    p.add_argument("--force", action="store_true", help="lift size guards")
    p.set_defaults(func=cmd_tu_sign)

    p = top.add_parser("sum", help="compose two standard representation documents")
    p.add_argument("-k", "--k", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    _add_sum_label_flags(p)
    p.set_defaults(func=cmd_sum)

    reg = top.add_parser("regular", help="regularity").add_subparsers(dest="sub", required=True)
    p = reg.add_parser("check", help="decide regularity of a GF(2) standard representation")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="write the TU signing witness here")
    p.add_argument("--force", action="store_true", help="lift size guards")
    p.set_defaults(func=cmd_regular_check)

    mat = top.add_parser("matroid", help="matroid queries").add_subparsers(dest="sub", required=True)
    p = mat.add_parser("info", help="rank, element count, and bases of a document's matroid")
    p.add_argument("input")
    p.add_argument("--max-bases", type=int, default=50, help="list bases up to this count")
    p.set_defaults(func=cmd_matroid_info)
    p = mat.add_parser("eq", help="exhaustive matroid equality of two documents")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_matroid_eq)

    ver = top.add_parser("verify", help="verification pipelines").add_subparsers(dest="sub", required=True)
    p = ver.add_parser(
        "composition",
        help="check that a k-sum of two regular summands is regular, with witnesses",
    )
    p.add_argument("-k", "--k", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out-dir", help="directory for the sum and witness documents")
    p.add_argument("--force", action="store_true", help="lift size guards")
    _add_sum_label_flags(p)
    p.set_defaults(func=cmd_verify_composition)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
