"""Command line surface.

Subcommands: validate, ideals, check, sweep, zphi, golden.  Output is
human-readable text by default, or line-delimited structured records with
--json; --out sends the report body to a file.  Exit codes: 0 no
violations, 1 at least one failing record, 2 usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import classify, zphi
from .core import FiniteHyperring, TableFormatError, elems_of, mask_of, parse_ring_spec
from .harness import (
    Report,
    RingFamilySpec,
    run_golden_examples,
    run_theorem_suite,
)
from .ideals import (
    enumerate_hyperideals,
    is_hyperideal,
    radical_nilpotent,
    radical_prime_intersection,
    is_c_hyperideal,
    is_strong_c_hyperideal,
)
from .verdicts import (
    FAILS,
    HOLDS,
    ParameterError,
    ResourceError,
    SplitMode,
    UsageError,
    UVParams,
)


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"bad {what} list: {text!r}") from exc


def _parse_moduli(text: str) -> tuple[int, ...]:
    """Comma list or a..b range."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            return tuple(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise UsageError(f"bad moduli range: {text!r}") from exc
    return tuple(_parse_int_list(text, "moduli"))


def _mode(text: str) -> SplitMode:
    try:
        return SplitMode(text)
    except ValueError as exc:
        raise UsageError(f"mode must be 'any' or 'all', got {text!r}") from exc


def _workers_from_env() -> int:
    raw = os.environ.get("HYPERLAB_WORKERS")
    if raw is None:
        return 1
    try:
        w = int(raw)
    except ValueError as exc:
        raise UsageError(f"HYPERLAB_WORKERS must be an integer, got {raw!r}") from exc
    if w < 1:
        raise UsageError("HYPERLAB_WORKERS must be positive")
    return w


def _emit(report: Report, args) -> None:
    if args.json:
        body = report.to_jsonl()
    else:
        lines = []
        for r in report.records:
            extra = f" witness={json.dumps(r['witness'])}" if r["witness"] else ""
            lines.append(
                f"[{r['status']}] ring={r['ring']} ideal={r['ideal']} "
                f"property={r['property']} params={json.dumps(r['params'])}{extra}"
            )
        lines.append(report.summary().splitlines()[0])
        body = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body + "\n")
        if not args.json:
            print(report.summary().splitlines()[0])
    else:
        print(body)


def _exit_code(report: Report) -> int:
    return 1 if report.violations else 0


# -- subcommand bodies -----------------------------------------------------------


def cmd_validate(args) -> int:
    ring = parse_ring_spec(args.ring)
    rep = ring.validate()
    report = Report()
    report.add(
        ring.name,
        None,
        "hyperring-axioms",
        {
            "tested": 1,
            "n": ring.n,
            "strongly_distributive": rep.strongly_distributive,
            "has_identity": ring.has_identity,
        },
        HOLDS if rep.ok else FAILS,
        None if rep.ok else {"failures": [f.describe() for f in rep.failures]},
        "axiom validation",
    )
    _emit(report, args)
    return _exit_code(report)


def cmd_ideals(args) -> int:
    ring = parse_ring_spec(args.ring)
    if not ring.validate().ok:
        raise UsageError(f"{args.ring}: not a hyperring; run validate for details")
    lattice = enumerate_hyperideals(ring)
    report = Report()
    for b, prime, maximal in zip(lattice.ideals, lattice.prime, lattice.maximal):
        params = {
            "tested": 1,
            "prime": prime,
            "maximal": maximal,
            "proper": b.proper,
        }
        if b.proper:
            params["c"] = is_c_hyperideal(ring, b.mask).holds
            params["strong_c"] = is_strong_c_hyperideal(ring, b.mask).holds
            params["radical"] = elems_of(radical_nilpotent(ring, b.mask))
        report.add(ring.name, b.members(), "hyperideal", params, HOLDS, None, "lattice dump")
    _emit(report, args)
    return 0


CHECK_PROPS = (
    "prime",
    "primary",
    "c",
    "strong-c",
    "uv-primary",
    "uv-prime",
    "uv-i-primary",
    "1-absorbing-primary",
    "divided",
)


def cmd_check(args) -> int:
    ring = parse_ring_spec(args.ring)
    if not ring.validate().ok:
        raise UsageError(f"{args.ring}: not a hyperring; run validate for details")
    mode = _mode(args.mode)
    prop = args.prop
    params: dict = {"mode": mode.value}

    if prop == "divided":
        verdict = classify.is_divided(ring)
        report = Report()
        report.add_verdict(ring.name, None, prop, params, verdict)
        _emit(report, args)
        return _exit_code(report)

    if args.ideal is None:
        raise UsageError(f"--ideal is required for property {prop!r}")
    pmask = mask_of(_parse_int_list(args.ideal, "ideal"))
    if not is_hyperideal(ring, pmask):
        raise UsageError(f"{args.ideal!r} is not a hyperideal of {args.ring}")
    rad = radical_nilpotent(ring, pmask)

    needs_uv = prop in ("uv-primary", "uv-prime", "uv-i-primary")
    if needs_uv:
        if args.u is None or args.v is None:
            raise UsageError(f"--u and --v are required for property {prop!r}")
        uv = UVParams(args.u, args.v)
        params.update(u=args.u, v=args.v)

    if args.replay is not None:
        if prop not in ("uv-primary", "uv-prime"):
            raise UsageError("--replay supports uv-primary and uv-prime only")
        factors = _parse_int_list(args.replay, "replay")
        concl = pmask if prop == "uv-prime" else rad
        confirmed = classify.replay_uv_counterexample(
            ring, pmask, concl, factors, uv.v, mode=mode
        )
        report = Report()
        report.add(
            ring.name,
            elems_of(pmask),
            prop,
            {**params, "tested": 1, "replay": True},
            FAILS if confirmed else HOLDS,
            {"factors": factors} if confirmed else None,
            "witness replay",
        )
        _emit(report, args)
        return _exit_code(report)

    if prop == "prime":
        verdict = classify.is_prime(ring, pmask)
    elif prop == "primary":
        verdict = classify.is_primary(ring, pmask, rad)
    elif prop == "c":
        verdict = is_c_hyperideal(ring, pmask)
    elif prop == "strong-c":
        verdict = is_strong_c_hyperideal(ring, pmask)
    elif prop == "uv-primary":
        verdict = classify.is_uv_absorbing_primary(ring, pmask, rad, uv, mode=mode)
    elif prop == "uv-prime":
        verdict = classify.is_uv_absorbing_prime(ring, pmask, uv, mode=mode)
    elif prop == "uv-i-primary":
        if args.aux_ideal is None:
            raise UsageError("--aux-ideal is required for uv-i-primary")
        imask = mask_of(_parse_int_list(args.aux_ideal, "aux ideal"))
        if not is_hyperideal(ring, imask):
            raise UsageError(f"{args.aux_ideal!r} is not a hyperideal of {args.ring}")
        verdict = classify.is_uv_absorbing_i_primary(ring, pmask, imask, rad, uv, mode=mode)
        params["aux_ideal"] = elems_of(imask)
    else:
        verdict = classify.is_1_absorbing_primary(ring, pmask, rad, mode=mode)

    report = Report()
    report.add_verdict(ring.name, elems_of(pmask), prop, params, verdict)
    _emit(report, args)
    return _exit_code(report)


def cmd_sweep(args) -> int:
    _workers_from_env()  # validated; execution is serial and order-canonical
    spec = RingFamilySpec(
        moduli=_parse_moduli(args.moduli),
        phi_sizes=tuple(_parse_int_list(args.phi_sizes, "phi sizes")),
        phi_universe=(
            tuple(_parse_int_list(args.phi_universe, "phi universe"))
            if args.phi_universe is not None
            else None
        ),
        u_max=args.u_max,
        mode=_mode(args.mode),
        tuple_budget=args.tuple_budget,
        matrix_cap=args.matrix_cap,
        include_constructions=not args.no_constructions,
        timings=args.timings,
    )
    report = run_theorem_suite(spec)
    _emit(report, args)
    return _exit_code(report)


def cmd_zphi(args) -> int:
    mode = _mode(args.mode)
    report = Report()
    prop = args.prop
    if prop in ("uv-primary", "uv-prime"):
        if args.d is None or args.u is None or args.v is None:
            raise UsageError("--d, --u and --v are required for the windowed checks")
        ring = zphi.ZPhiRing(_parse_int_list(args.phi, "phi"))
        uv = UVParams(args.u, args.v)
        variant = "prime" if prop == "uv-prime" else "primary"
        name = "zphi:" + ",".join(map(str, ring.phi))
        if args.replay is not None:
            factors = _parse_int_list(args.replay, "replay")
            confirmed = zphi.replay_int_counterexample(
                ring, args.d, factors, uv, variant=variant, mode=mode
            )
            report.add(
                name,
                [args.d],
                prop,
                {"u": args.u, "v": args.v, "mode": mode.value, "tested": 1, "replay": True},
                FAILS if confirmed else HOLDS,
                {"factors": factors} if confirmed else None,
                "witness replay",
            )
        else:
            if args.window is None:
                raise UsageError("--window is required for the windowed checks")
            verdict = zphi.bounded_uv_check(
                ring, args.d, uv, args.window, variant=variant, mode=mode
            )
            report.add_verdict(
                name,
                [args.d],
                prop,
                {"u": args.u, "v": args.v, "mode": mode.value, "window": args.window},
                verdict,
            )
    elif prop == "product":
        ring = zphi.ZPhiRing(_parse_int_list(args.phi, "phi"))
        factors = _parse_int_list(args.factors or "", "factors")
        if not factors:
            raise UsageError("--factors is required for product")
        values = sorted(zphi.int_product(ring, factors))
        name = "zphi:" + ",".join(map(str, ring.phi))
        report.add(
            name, None, "hyperproduct-exact",
            {"tested": 1, "factors": factors, "value": values},
            HOLDS, None, "exact integer product",
        )
    elif prop == "membership":
        ring = zphi.ZPhiRing(_parse_int_list(args.phi, "phi"))
        factors = _parse_int_list(args.factors or "", "factors")
        if not factors or args.d is None:
            raise UsageError("--factors and --d are required for membership")
        value = zphi.principal_membership(args.d, zphi.int_product(ring, factors))
        name = "zphi:" + ",".join(map(str, ring.phi))
        report.add(
            name, [args.d], "principal-membership",
            {"tested": 1, "factors": factors, "relation": value},
            HOLDS, None, "membership against the principal hyperideal",
        )
    elif prop == "radical":
        ring = zphi.ZPhiRing(_parse_int_list(args.phi, "phi"))
        if args.d is None or args.a is None:
            raise UsageError("--d and --a are required for radical")
        member = zphi.radical_membership(ring, args.d, args.a)
        profile = zphi.radical_profile(ring, args.d)
        name = "zphi:" + ",".join(map(str, ring.phi))
        report.add(
            name, [args.d], "radical-membership",
            {"tested": 1, "a": args.a, "member": member, "radical_generator": profile.generator},
            HOLDS, None, "valuation criterion",
        )
    elif prop == "intersection":
        ds = _parse_int_list(args.d_list or "", "generator")
        if not ds:
            raise UsageError("--d-list is required for intersection")
        report.add(
            "zphi", ds, "principal-intersection",
            {"tested": 1, "generator": zphi.ideal_intersection(ds)},
            HOLDS, None, "least common multiple of the generators",
        )
    else:
        raise UsageError(f"unknown zphi property {prop!r}")
    _emit(report, args)
    return _exit_code(report)


def cmd_golden(args) -> int:
    report = run_golden_examples(mode=_mode(args.mode))
    _emit(report, args)
    return _exit_code(report)


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hyperlab",
        description="Finite multiplicative hyperrings: classification and theorem sweeps.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--json", action="store_true", help="line-delimited structured records")
        p.add_argument("--out", default=None, help="write the report body to this file")
        p.add_argument("--mode", default="any", help="split aggregation: any | all")

    p = sub.add_parser("validate", help="check the hyperring axioms for a ring config")
    p.add_argument("--ring", required=True, help="z<n>:<c1>,<c2>,... or a JSON table file")
    common(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("ideals", help="dump the hyperideal lattice with flags")
    p.add_argument("--ring", required=True)
    common(p)
    p.set_defaults(fn=cmd_ideals)

    p = sub.add_parser("check", help="decide one property of one hyperideal")
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", default=None, help="comma-separated ideal members")
    p.add_argument("--prop", required=True, choices=CHECK_PROPS)
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--aux-ideal", default=None, help="the I of the I-primary variant")
    p.add_argument("--replay", default=None, help="replay a witness factor list")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("sweep", help="run the theorem suite over a ring family")
    p.add_argument("--moduli", default="2..12", help="comma list or a..b range")
    p.add_argument("--phi-sizes", default="2,3")
    p.add_argument("--phi-universe", default=None, help="residues to draw phi from")
    p.add_argument("--u-max", type=int, default=5)
    p.add_argument("--tuple-budget", type=int, default=10_000_000)
    p.add_argument("--matrix-cap", type=int, default=64)
    p.add_argument("--no-constructions", action="store_true")
    p.add_argument("--timings", action="store_true", help="stamp records with elapsed millis")
    common(p)
    # the suite's statements quantify over every split; the existential
    # reading is available with --mode any
    p.set_defaults(fn=cmd_sweep, mode="all")

    p = sub.add_parser("zphi", help="exact and windowed checks over the integer hyperring")
    p.add_argument("--phi", default="2,3", help="comma-separated multipliers")
    p.add_argument("--d", type=int, default=None, help="principal generator")
    p.add_argument("--prop", required=True,
                   help="uv-primary | uv-prime | product | membership | radical | intersection")
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--factors", default=None, help="factor list for product/membership")
    p.add_argument("--a", type=int, default=None, help="element for the radical check")
    p.add_argument("--d-list", default=None, help="generators for intersection")
    p.add_argument("--replay", default=None, help="replay a witness factor list")
    common(p)
    p.set_defaults(fn=cmd_zphi)

    p = sub.add_parser("golden", help="replay the worked integer examples")
    common(p)
    p.set_defaults(fn=cmd_golden)

    return top


def classify_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ParameterError, TableFormatError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(classify_cli())


if __name__ == "__main__":
    main()
