"""Deterministic command-line front end.

Reports are plain text, one `KEY: value` per line in a stable key order;
identical inputs produce byte-identical reports regardless of worker count.
Every negative verdict carries a machine-readable `REASON:` line.

Exit codes: 0 success or affirmative verdict; 1 semantic invalidity or a
negative verdict; 2 parse error; 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import bundle as bundle_mod
from . import gauge as gauge_mod
from .algebra import two_group_from_crossed_module
from .catalog import CM_BUILDERS, COMPLEX_BUILDERS
from .cech import (
    DEFAULT_BUDGET,
    are_cohomologous,
    classify,
    stabilizer,
)
from .complexes import abelian_cohomology_oracle, valid_tuples
from .errors import CechmodError, ParseError, SearchSpaceTooLarge
from .io import (
    parse_cocycle_file,
    parse_group_file,
    parse_one_cocycle_file,
    resolve_complex,
    resolve_crossed_module,
)

OK, INVALID, PARSE, BUDGET = 0, 1, 2, 3


def _cocycle_lines(prefix: str, z) -> list[str]:
    out = []
    eG, eH = z.cm.G.identity, z.cm.H.identity
    for (i, j) in valid_tuples(z.complex, 2):
        if z.g[(i, j)] != eG:
            out.append(f"{prefix}g {i} {j} {z.g[(i, j)]}")
    for (i, j, k) in valid_tuples(z.complex, 3):
        if z.h[(i, j, k)] != eH:
            out.append(f"{prefix}h {i} {j} {k} {z.h[(i, j, k)]}")
    return out


def _coboundary_lines(prefix: str, c) -> list[str]:
    out = []
    eG, eH = c.cm.G.identity, c.cm.H.identity
    for v in range(c.complex.vertex_count):
        if c.gamma[v] != eG:
            out.append(f"{prefix}gamma {v} {c.gamma[v]}")
    for p in valid_tuples(c.complex, 2):
        if c.eta[p] != eH:
            out.append(f"{prefix}eta {p[0]} {p[1]} {c.eta[p]}")
    return out


def cmd_validate(args) -> tuple[int, list[str]]:
    given = [k for k in ("group", "cm", "complex", "cocycle") if getattr(args, k)]
    if len(given) != 1:
        raise ParseError("<args>", 0, "validate needs exactly one of --group/--cm/--complex/--cocycle")
    kind = given[0]
    lines = [f"KIND: {kind}"]
    if kind == "group":
        g = parse_group_file(args.group)
        lines += [f"NAME: {g.name}", f"ORDER: {g.order}", f"IDENTITY: {g.identity}"]
    elif kind == "cm":
        cm = resolve_crossed_module(args.cm)
        lines += [f"G_ORDER: {cm.G.order}", f"H_ORDER: {cm.H.order}",
                  f"BETA_SURJECTIVE: {'yes' if cm.beta.is_surjective() else 'no'}"]
    elif kind == "complex":
        K = resolve_complex(args.complex)
        counts = K.simplex_counts()
        lines += [f"VERTICES: {K.vertex_count}",
                  f"SIMPLICES: {sum(counts.values())}",
                  f"EULER: {K.euler_characteristic()}"]
    else:
        z = parse_cocycle_file(args.cocycle)
        lines += [f"VERTICES: {z.complex.vertex_count}",
                  f"G_ORDER: {z.cm.G.order}", f"H_ORDER: {z.cm.H.order}"]
    lines.append("VALID: yes")
    return OK, lines


def cmd_classify(args) -> tuple[int, list[str]]:
    K = resolve_complex(args.complex)
    cm = resolve_crossed_module(args.cm)
    result = classify(K, cm, args.strategy, budget=args.budget, workers=args.workers)
    lines = [f"COMPLEX: {args.complex}", f"CM: {args.cm}",
             f"STRATEGY: {result.strategy}", f"CLASSES: {result.count}"]
    if result.cocycles_enumerated is not None:
        lines.append(f"ENUMERATED: {result.cocycles_enumerated}")
    for idx, rep in enumerate(result.representatives):
        body = _cocycle_lines(f"REP {idx} ", rep)
        lines += body if body else [f"REP {idx} trivial"]
    return OK, lines


def cmd_cohomologous(args) -> tuple[int, list[str]]:
    z = parse_cocycle_file(args.cocycle)
    z2 = parse_cocycle_file(args.cocycle2)
    w = are_cohomologous(z, z2, budget=args.budget)
    if w is None:
        return INVALID, ["COHOMOLOGOUS: no",
                         "REASON: exhaustive coboundary search found no witness"]
    lines = ["COHOMOLOGOUS: yes"]
    body = _coboundary_lines("WITNESS ", w)
    lines += body if body else ["WITNESS identity"]
    return OK, lines


def cmd_stabilizer(args) -> tuple[int, list[str]]:
    z = parse_cocycle_file(args.cocycle)
    stab = stabilizer(z, budget=args.budget)
    lines = [f"SIZE: {len(stab)}"]
    for idx, c in enumerate(stab):
        body = _coboundary_lines(f"ELEMENT {idx} ", c)
        lines += body if body else [f"ELEMENT {idx} identity"]
    return OK, lines


def cmd_bundle_check(args) -> tuple[int, list[str]]:
    z = parse_cocycle_file(args.cocycle)
    P = bundle_mod.build_total_groupoid(z)
    lines = [f"OBJECTS: {len(P.objects)}", f"MORPHISMS: {len(P.morphisms)}"]
    bad = P.check_axioms()
    lines.append(f"AXIOMS: {'pass' if not bad else 'fail'}")
    if bad:
        return INVALID, lines + [f"REASON: {bad[0]}"]
    bad = bundle_mod.check_action(P)
    lines.append(f"ACTION: {'pass' if not bad else 'fail'}")
    if bad:
        return INVALID, lines + [f"REASON: {bad[0]}"]
    trivs = bundle_mod.canonical_trivializations(z)
    for i, tv in trivs.items():
        bad = bundle_mod.check_trivialization(z, tv)
        if bad:
            lines.append(f"TRIVIALIZATIONS: fail")
            return INVALID, lines + [f"REASON: vertex {i}: {bad[0]}"]
    lines.append("TRIVIALIZATIONS: pass")
    zhat = bundle_mod.extract_cocycle(P, trivs)
    exact = zhat == z
    lines.append(f"ROUNDTRIP: {'exact' if exact else 'fail'}")
    if not exact:
        return INVALID, lines + ["REASON: extracted cocycle differs"]
    return OK, lines


def cmd_band(args) -> tuple[int, list[str]]:
    z = parse_cocycle_file(args.cocycle)
    b = bundle_mod.band(z)
    lines = [f"BAND_GROUP_ORDER: {b.group.order}"]
    for p in valid_tuples(z.complex, 2):
        if b.values[p] != b.group.identity:
            lines.append(f"BAND g {p[0]} {p[1]} {b.values[p]}")
    lines.append(f"BAND_TRIVIAL_CLASS: {'yes' if b.is_trivial_class() else 'no'}")
    return OK, lines


def cmd_reduce_central(args) -> tuple[int, list[str]]:
    z = parse_cocycle_file(args.cocycle)
    red = bundle_mod.central_reduction(z)
    lines = [f"KERNEL_ORDER: {red.kernel.order}"]
    for t in valid_tuples(z.complex, 3):
        if red.reduced[t] != red.kernel.identity:
            lines.append(f"REDUCED h {t[0]} {t[1]} {t[2]} {red.reduced[t]}")
    body = _coboundary_lines("WITNESS ", red.witness)
    lines += body if body else ["WITNESS identity"]
    return OK, lines


def cmd_lift(args) -> tuple[int, list[str]]:
    K = resolve_complex(args.complex)
    cm = resolve_crossed_module(args.cm)
    g = parse_one_cocycle_file(args.cocycle, K, cm.G)
    res = bundle_mod.lifting_obstruction(K, cm, g, budget=args.budget)
    lines = [f"KERNEL_ORDER: {res.kernel.order}"]
    for t in valid_tuples(K, 3):
        if res.obstruction[t] != res.kernel.identity:
            lines.append(f"OBSTRUCTION a {t[0]} {t[1]} {t[2]} {res.obstruction[t]}")
    if not res.exists:
        return INVALID, lines + ["LIFT: none", "REASON: obstruction class nonvanishing"]
    lines.append("LIFT: exists")
    for p in valid_tuples(K, 2):
        if res.lift[p] != cm.H.identity:
            lines.append(f"LIFT h {p[0]} {p[1]} {res.lift[p]}")
    return OK, lines


def cmd_quotient(args) -> tuple[int, list[str]]:
    z = parse_cocycle_file(args.cocycle)
    P = bundle_mod.build_total_groupoid(z)
    Q = bundle_mod.quotient_by_structure_group(P)
    return OK, [f"OBJECTS: {len(Q.objects)}", f"MORPHISMS: {len(Q.morphisms)}",
                "AXIOMS: pass"]


def cmd_gauge(args) -> tuple[int, list[str]]:
    z = parse_cocycle_file(args.cocycle)
    gcm = gauge_mod.gauge_crossed_module(z, budget=args.budget)
    return OK, [f"GSTAR: {gcm.cm.G.order}", f"HSTAR: {gcm.cm.H.order}",
                f"PI0: {gcm.pi0.order}", f"PI1: {gcm.pi1.order}",
                f"CONVENTION: {gcm.convention}"]


def cmd_aut2group(args) -> tuple[int, list[str]]:
    cm = resolve_crossed_module(args.cm)
    tg = two_group_from_crossed_module(cm)
    fs, ts = gauge_mod.equivariant_endofunctors_of_2group(tg)
    return OK, [f"FUNCTORS: {len(fs)}", f"TRANSFORMATIONS: {len(ts)}"]


def cmd_oracle_h(args) -> tuple[int, list[str]]:
    K = resolve_complex(args.complex)
    size = abelian_cohomology_oracle(K, args.coeff, args.degree)
    return OK, [f"COMPLEX: {args.complex}", f"COEFF: {args.coeff}",
                f"DEGREE: {args.degree}", f"CARDINALITY: {size}"]


COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "cohomologous": cmd_cohomologous,
    "stabilizer": cmd_stabilizer,
    "bundle-check": cmd_bundle_check,
    "band": cmd_band,
    "reduce-central": cmd_reduce_central,
    "lift": cmd_lift,
    "quotient": cmd_quotient,
    "gauge": cmd_gauge,
    "aut2group": cmd_aut2group,
    "oracle-h": cmd_oracle_h,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cechmod",
        description="Exact nonabelian Cech cohomology over finite simplicial bases.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--complex", help="built-in name or complex file "
                       f"(built-ins: {', '.join(sorted(COMPLEX_BUILDERS))})")
        p.add_argument("--cm", help="built-in name or crossed-module file "
                       f"(built-ins: {', '.join(sorted(CM_BUILDERS))})")
        p.add_argument("--group", help="group file (validate)")
        p.add_argument("--cocycle", help="cocycle file (or 1-cocycle file for lift)")
        p.add_argument("--cocycle2", help="second cocycle file")
        p.add_argument("--strategy", choices=["brute", "abelian"], default="brute")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", help="write the report to this path")
        p.add_argument("--coeff", type=int, default=2)
        p.add_argument("--degree", type=int, default=2)
    return parser


def run(argv: list[str]) -> tuple[int, str]:
    """Parse arguments, dispatch, and return (exit code, report text)."""
    args = build_parser().parse_args(argv)
    if args.budget <= 0 or args.workers <= 0:
        return PARSE, "REASON: budget and worker count must be positive\n"
    try:
        code, lines = COMMANDS[args.command](args)
    except ParseError as exc:
        return PARSE, f"REASON: {exc}\n"
    except SearchSpaceTooLarge as exc:
        return BUDGET, f"REASON: {exc}\n"
    except CechmodError as exc:
        return INVALID, f"VALID: no\nREASON: {exc}\n"
    report = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report)
    return code, report


def main() -> None:
    code, report = run(sys.argv[1:])
    sys.stdout.write(report)
    sys.exit(code)


if __name__ == "__main__":
    main()
