"""Command line interface: ``snalab <command> <file> [options]``.

Exit codes: 0 success, 1 a mathematical failure or refused operation
(details on stdout/stderr), 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .algebra import SnaAlgebra, verify_kleene, verify_nelson, verify_sna
from .centered import center_report, representable_as_twist
from .congruence import open_implicative_filters, theta_of_filter
from .dot import hasse_dot, srl_dot
from .errors import LatticeError, ParseError, SnaLabError, UnknownElement, ValidationError
from .residuation import residuated_view, term_translation_gap, verify_nelson_lattice, verify_translation
from .srl import Srl, dense_elements, subresiduated_filters, verify_srl
from .twist import TwistAlgebra, quotient_srl, rho, twist_filtered, twist_full
from .varieties import check_chain_variety, subdirect_embedding

INPUT_ERRORS = (ParseError, ValidationError, LatticeError, UnknownElement)


class InputError(Exception):
    pass


def _load(path, want=None):
    obj = io.load(path)
    if want is not None and not isinstance(obj, want):
        kind = {Srl: "srl", SnaAlgebra: "sna"}[want]
        raise InputError(f"{path}: expected an algebra of kind {kind}")
    return obj


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    A = _load(args.file)
    kind = args.kind
    if kind == "srl":
        if not isinstance(A, Srl):
            raise InputError("--kind srl needs an srl file")
        v = verify_srl(A, args.full_report)
    elif kind == "nelson-lattice":
        if not isinstance(A, TwistAlgebra):
            raise InputError("--kind nelson-lattice needs a twist (use twist_of)")
        v = verify_nelson_lattice(residuated_view(A), args.full_report)
    else:
        if not isinstance(A, SnaAlgebra):
            raise InputError(f"--kind {kind} needs an sna file")
        v = {"kleene": verify_kleene, "nelson": verify_nelson, "sna": verify_sna}[kind](A, args.full_report)
    print(v)
    if args.full_report:
        for f in v.failures:
            for w in f.witnesses:
                print("\t".join([f.law] + [f"{k}={val}" for k, val in w.items()]))
    return 0 if v.ok else 1


def cmd_twist(args) -> int:
    S = _load(args.file, Srl)
    if args.filter:
        T = twist_filtered(S, S.lattice.upset(args.filter))
        T.name = f"K({S.name or 'A'},up {args.filter})"
    else:
        T = twist_full(S)
    _emit(io.dumps(T, args.format), args.output)
    return 0


def cmd_quotient(args) -> int:
    T = _load(args.file, SnaAlgebra)
    Q = quotient_srl(T)
    _emit(io.dumps(Q.srl, args.format), args.output)
    return 0


def congruence_rows(T) -> list[list[str]]:
    rows = []
    for F in open_implicative_filters(T):
        P = theta_of_filter(T, F)
        rows.append([str(F), P.describe(T.names), str(P.num_blocks)])
    return rows


def cmd_congruences(args) -> int:
    T = _load(args.file, SnaAlgebra)
    print("filter\tcongruence\tquotient_size")
    for row in congruence_rows(T):
        print("\t".join(row))
    return 0


def cmd_variety(args) -> int:
    T = _load(args.file, SnaAlgebra)
    v = check_chain_variety(T)
    for line in v.lines():
        print(line)
    if v.member and T.n > 1:
        e = subdirect_embedding(T)
        print(f"subdirect factors: {len(e.factors)}")
        for F in e.factors:
            print(f"  {F.filter}\t{F.algebra.n} elements\t" + " < ".join(F.algebra.names))
    return 0 if v.member else 1


def cmd_center(args) -> int:
    T = _load(args.file, SnaAlgebra)
    for line in center_report(T).lines():
        print(line)
    rep = representable_as_twist(T)
    print(f"twist of an sr-lattice: {'yes' if rep.representable else 'no'} ({rep.reason})")
    return 0


def cmd_dot(args) -> int:
    A = _load(args.file)
    _emit(srl_dot(A) if isinstance(A, Srl) else hasse_dot(A), args.output)
    if args.figure:
        from .plotting import hasse_figure

        hasse_figure(A, args.figure, highlight=A.d_set if isinstance(A, Srl) else ())
    return 0


def cmd_residuated(args) -> int:
    A = _load(args.file)
    if isinstance(A, Srl):
        S, K = A, twist_full(A)
    elif isinstance(A, TwistAlgebra):
        S, K = A.source, A
    else:
        raise InputError("residuated needs an srl file or a twist")
    V = residuated_view(K)
    v1, v2 = verify_nelson_lattice(V), verify_translation(V)
    print(v1)
    print(v2)
    for line in term_translation_gap(S).lines():
        print(line)
    return 0 if (v1.ok and v2.ok) else 1


def cmd_report(args) -> int:
    """Delimited summary tables plus figures in one directory."""
    from .plotting import congruence_figure, hasse_figure

    A = _load(args.file)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(args.file).stem
    summary: list[tuple[str, str]] = [("file", str(args.file)), ("elements", str(A.n))]
    if isinstance(A, Srl):
        summary += [
            ("kind", "srl"),
            ("srl", "pass" if verify_srl(A).ok else "fail"),
            ("heyting", "yes" if A.is_heyting else "no"),
            ("D", " ".join(A.lattice.names_of(sorted(A.d_set)))),
            ("dense", " ".join(A.lattice.names_of(sorted(dense_elements(A))))),
            ("subresiduated_filters", "; ".join(" ".join(A.lattice.names_of(sorted(F)))
                                                for F in subresiduated_filters(A))),
        ]
        gap = term_translation_gap(A)
        summary.append(("translation_gap", " ".join(f"{k}={v}" for k, v in gap.witness.items()) if gap.found else "none"))
        (out / f"{stem}.dot").write_text(srl_dot(A), encoding="utf-8")
        hasse_figure(A, out / f"{stem}_hasse.png", highlight=A.d_set)
    elif isinstance(A, SnaAlgebra):
        ok = verify_sna(A).ok
        summary += [("kind", "sna"), ("sna", "pass" if ok else "fail"),
                    ("kleene", "pass" if verify_kleene(A).ok else "fail"),
                    ("nelson", "pass" if verify_nelson(A).ok else "fail")]
        (out / f"{stem}.dot").write_text(hasse_dot(A), encoding="utf-8")
        hasse_figure(A, out / f"{stem}_hasse.png")
        if ok:
            r = rho(A)
            cv = check_chain_variety(A)
            rep = representable_as_twist(A)
            summary += [
                ("quotient_size", str(quotient_srl(A).srl.n)),
                ("rho_surjective", "yes" if r.surjective else "no"),
                ("center", A.names[A.center] if A.center is not None else "none"),
                ("twist_representable", "yes" if rep.representable else "no"),
                ("chain_variety", "yes" if cv.member else "no"),
            ]
            rows = congruence_rows(A)
            summary.append(("congruences", str(len(rows))))
            with open(out / f"{stem}_congruences.tsv", "w", encoding="utf-8") as fh:
                fh.write("filter\tcongruence\tquotient_size\n")
                fh.writelines("\t".join(r) + "\n" for r in rows)
            F = open_implicative_filters(A)
            congruence_figure(A, [theta_of_filter(A, f) for f in F], F, out / f"{stem}_congruences.png",
                              title=f"Con {A.name or stem}")
    else:
        summary.append(("kind", "lattice"))
        (out / f"{stem}.dot").write_text(hasse_dot(A), encoding="utf-8")
        hasse_figure(A, out / f"{stem}_hasse.png")
    text = "key\tvalue\n" + "".join(f"{k}\t{v}\n" for k, v in summary)
    (out / f"{stem}_summary.tsv").write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="snalab", description="Finite sr-lattices, twists and subresiduated Nelson algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run an axiom suite")
    c.add_argument("file")
    c.add_argument("--kind", required=True, choices=["srl", "kleene", "nelson", "sna", "nelson-lattice"])
    c.add_argument("--full-report", action="store_true", help="list every failing tuple")
    c.set_defaults(func=cmd_check)

    for name, func, hlp in (("twist", cmd_twist, "write the twist of an sr-lattice"),
                            ("quotient", cmd_quotient, "write the sr-lattice quotient of an SNA")):
        c = sub.add_parser(name, help=hlp)
        c.add_argument("file")
        c.add_argument("-o", "--output")
        c.add_argument("--format", choices=["yaml", "json"], default="yaml")
        if name == "twist":
            c.add_argument("--filter", metavar="ELEMENT", help="use the filter generated by ELEMENT")
        c.set_defaults(func=func)

    for name, func, hlp in (("congruences", cmd_congruences, "filter / congruence / quotient table"),
                            ("variety", cmd_variety, "membership in the variety generated by chains"),
                            ("center", cmd_center, "center, (C), (CK) and twist representability"),
                            ("residuated", cmd_residuated, "residuated operations on a twist")):
        c = sub.add_parser(name, help=hlp)
        c.add_argument("file")
        c.set_defaults(func=func)

    c = sub.add_parser("dot", help="Hasse diagram in DOT format")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.add_argument("--figure", metavar="PNG", help="also render the diagram with matplotlib")
    c.set_defaults(func=cmd_dot)

    c = sub.add_parser("report", help="summary TSV files and figures")
    c.add_argument("file")
    c.add_argument("--out", required=True, metavar="DIR")
    c.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (InputError, *INPUT_ERRORS) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SnaLabError as e:
        print(f"failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
