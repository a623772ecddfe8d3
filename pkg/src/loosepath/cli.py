"""Command-line interface: spectrum computation, eigenpair verification,
and asymptotic sweeps with table/CSV/JSON export.

Exit codes:
    0  success, all verifications passed
    2  validation error (bad flags, bad ranges, unwritable output)
    3  isolation found a different root count than the catalog expects
    4  an emitted eigenpair failed residual re-verification
    5  completed, but discrepancies were flagged (count mismatch with the
       claimed catalog size, or case roots without a verifying eigenvector)
"""

import argparse
import json
import sys
from typing import List, Optional

from . import asymptotics, rootfind, spectrum
from .cases import EVEN_TAGS, ODD_TAGS
from .hypergraph import build_loose_path
from .multilinear import eig_residual

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_ROOT_COUNT = 3
EXIT_RESIDUAL = 4
EXIT_DISCREPANCY = 5


def _f17(v: float) -> str:
    return format(float(v), ".17g")


def _f6(v: float) -> str:
    return format(float(v), ".6g")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loosepath",
        description="Laplacian H-spectrum of k-uniform loose paths of "
                    "length three",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=rootfind.DEFAULT_TOL,
                       help="bisection tolerance (default 1e-12)")
        p.add_argument("--dedup-tol", type=float, default=spectrum.DEDUP_TOL,
                       help="eigenvalue deduplication tolerance "
                            "(default 1e-9)")
        p.add_argument("--format", choices=("table", "csv", "json"),
                       default="table")
        p.add_argument("--output", default=None,
                       help="output path (default: standard output)")

    p = sub.add_parser("spectrum", help="compute the spectrum of G_{k,3}")
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="re-verify every emitted eigenpair")
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("sweep", help="spectra for a range of k")
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    common(p)

    p = sub.add_parser("sequence", help="lemma-backed root sequence in k")
    p.add_argument("--case", required=True, metavar="TAG",
                   help="one of " + ", ".join(sorted(
                       asymptotics.LEMMA_SEQUENCES)))
    p.add_argument("--kmax", type=int, required=True)
    common(p)

    return parser


def _validate(args) -> None:
    if args.tol <= 0:
        raise ValueError(f"--tol must be positive, got {args.tol}")
    if args.dedup_tol < args.tol:
        raise ValueError(
            f"--dedup-tol ({args.dedup_tol}) must be >= --tol ({args.tol})"
        )
    for name in ("k", "kmin", "kmax"):
        v = getattr(args, name, None)
        if v is not None and not 3 <= v <= 512:
            raise ValueError(f"--{name} must be in [3, 512], got {v}")
    if getattr(args, "kmin", None) is not None and args.kmin > args.kmax:
        raise ValueError(f"--kmin ({args.kmin}) exceeds --kmax ({args.kmax})")
    tag = getattr(args, "case", None)
    if tag is not None and tag not in ODD_TAGS and tag not in EVEN_TAGS:
        raise ValueError(f"unknown case tag: {tag!r}")


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _warn(messages) -> None:
    for msg in messages:
        print(f"warning: {msg}", file=sys.stderr)


# ---------------------------------------------------------------------------
# spectrum


def _spectrum_csv(report) -> str:
    lines = ["k,case_id,interval_lo,interval_hi,lambda,residual,cluster_id"]
    for r in report.case_results:
        lines.append(",".join([
            str(report.k), r.case_id, _f17(r.interval_lo),
            _f17(r.interval_hi), _f17(r.lam), _f17(r.residual),
            str(r.cluster_id),
        ]))
    return "\n".join(lines)


def _spectrum_table(report) -> str:
    lines = [
        f"k={report.k} ({report.parity})  distinct={report.distinct_count}"
        f"  claimed={report.paper_claimed_count}"
        f"  max_lambda={_f6(report.max_lambda)}"
        f"  dedup_tol={report.dedup_tol:g}",
        f"{'case':<11} {'interval':<22} {'lambda':>12} {'residual':>10} "
        f"{'cluster':>7}",
    ]
    for r in report.case_results:
        interval = f"({_f6(r.interval_lo)}, {_f6(r.interval_hi)})"
        cluster = str(r.cluster_id) if r.verified else "dropped"
        lines.append(
            f"{r.case_id:<11} {interval:<22} {_f6(r.lam):>12} "
            f"{r.residual:>10.2e} {cluster:>7}"
        )
    return "\n".join(lines)


def _cmd_spectrum(args) -> int:
    report = spectrum.compute_spectrum(args.k, tol=args.tol,
                                       dedup_tol=args.dedup_tol)
    if args.format == "csv":
        _emit(_spectrum_csv(report), args.output)
    elif args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=2), args.output)
    else:
        _emit(_spectrum_table(report), args.output)
    _warn(report.warnings)
    return EXIT_DISCREPANCY if report.warnings else EXIT_OK


def _cmd_verify(args) -> int:
    report = spectrum.compute_spectrum(args.k, tol=args.tol,
                                       dedup_tol=args.dedup_tol)
    path = build_loose_path(args.k, 3)
    lines = []
    failures = 0
    for e in report.entries:
        r = eig_residual(path, e.lam, e.x)
        ok = r <= spectrum.RESIDUAL_TOL
        failures += 0 if ok else 1
        lines.append(
            f"{e.case_id:<11} lambda={_f17(e.lam):<24} "
            f"residual={r:.3e}  {'PASS' if ok else 'FAIL'}"
        )
    lines.append(
        f"{len(report.entries) - failures}/{len(report.entries)} eigenpairs "
        f"passed (residual <= {spectrum.RESIDUAL_TOL:g})"
    )
    _emit("\n".join(lines), args.output)
    _warn(report.warnings)
    return EXIT_RESIDUAL if failures else EXIT_OK


# ---------------------------------------------------------------------------
# sweep / sequence


def _sweep_rows(rows):
    """Flatten sweep rows to (k, lambda, tags, nearest, distance, verified)."""
    flat = []
    for row in rows:
        merged = [(lam, ";".join(tags), True)
                  for lam, tags in zip(row.lambdas, row.case_ids)]
        merged += [(lam, tag, False) for tag, lam in row.unverified]
        merged.sort(key=lambda t: t[0])
        for lam, tags, ok in merged:
            near = asymptotics.nearest_limit(lam)
            flat.append((row.k, lam, tags, near, abs(lam - near), ok))
    return flat


def _cmd_sweep(args) -> int:
    rows = asymptotics.sweep(args.kmin, args.kmax, tol=args.tol)
    flat = _sweep_rows(rows)
    if args.format == "csv":
        lines = ["k,lambda,case_ids,nearest_limit,distance,verified"]
        for k, lam, tags, near, dist, ok in flat:
            lines.append(",".join([
                str(k), _f17(lam), tags, _f17(near), _f17(dist),
                "true" if ok else "false",
            ]))
        _emit("\n".join(lines), args.output)
    elif args.format == "json":
        payload = {
            "rows": [r.to_dict() for r in rows],
            "limit_points": list(asymptotics.LIMIT_POINTS),
            "cluster_tol_odd": asymptotics.CLUSTER_TOL_ODD,
            "cluster_tol_even": asymptotics.CLUSTER_TOL_EVEN,
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [f"{'k':>4} {'lambda':>12} {'nearest':>8} {'distance':>10} "
                 f"{'ok':>3}  case_ids"]
        for k, lam, tags, near, dist, ok in flat:
            lines.append(f"{k:>4} {_f6(lam):>12} {_f6(near):>8} "
                         f"{dist:>10.3e} {'yes' if ok else 'no':>3}  {tags}")
        _emit("\n".join(lines), args.output)
    dropped = sum(len(r.unverified) for r in rows)
    if dropped:
        _warn([f"{dropped} case roots across the sweep admit no eigenvector "
               f"and are marked verified=false"])
        return EXIT_DISCREPANCY
    return EXIT_OK


def _cmd_sequence(args) -> int:
    check = asymptotics.sequence(args.case, args.kmax, tol=args.tol)
    if args.format == "csv":
        lines = ["case_id,k,lambda,gap_to_limit"]
        for k, lam in zip(check.k_values, check.lambdas):
            lines.append(",".join([
                check.case_id, str(k), _f17(lam),
                _f17(abs(lam - check.claimed_limit)),
            ]))
        _emit("\n".join(lines), args.output)
    elif args.format == "json":
        _emit(json.dumps(check.to_dict(), indent=2), args.output)
    else:
        lines = [
            f"{check.case_id}: {check.direction} toward "
            f"{check.claimed_limit:g}; monotone="
            f"{'yes' if check.monotone_ok else 'NO'} "
            f"converging={'yes' if check.converging else 'NO'}",
            f"{'k':>4} {'lambda':>14} {'gap':>12}",
        ]
        for k, lam in zip(check.k_values, check.lambdas):
            gap = abs(lam - check.claimed_limit)
            lines.append(f"{k:>4} {_f6(lam):>14} {gap:>12.3e}")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "sequence": _cmd_sequence,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return _COMMANDS[args.command](args)
    except rootfind.RootCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ROOT_COUNT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
