"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 a domain invariant is
violated (not PD, trace not one, not unit norm, ...), 4 numerical failure
(an eigenvalue or singular value decomposition did not converge).
"""
import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import classical, qmetrics
from ._config import tolerances
from ._validate import as_density, as_hermitian, as_pd, as_positive_measure, as_trace_free
from .bw import bw_distance_pn, bw_metric, geodesic_pn
from .density import bw_distance_dn, geodesic_dn
from .errors import DomainError, ValidationError
from .io import ParseError, fmt, load_matrix, load_vector, matrix_payload

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NUMERIC = 0, 2, 3, 4

MATRIX_SPACES = ("pn", "dn")
DIST_SPACES = ("pn", "dn", "hellinger", "fisher", "fs")
METRICS = ("bw", "sld", "bogoliubov", "wy", "gh", "fisher")


class UsageError(Exception):
    pass


def _point(path, space):
    A, _, field = load_matrix(path)
    A = as_pd(A, str(path)) if space == "pn" else as_density(A, str(path))
    return A, field


def _dist(space, a, b):
    if space in MATRIX_SPACES:
        (A, _), (B, _) = _point(a, space), _point(b, space)
        return (bw_distance_pn if space == "pn" else bw_distance_dn)(A, B)
    x, _ = load_vector(a)
    y, _ = load_vector(b)
    if space == "hellinger":
        return classical.hellinger_distance(x, y)
    if space == "fisher":
        return classical.fisher_distance(x, y)
    return qmetrics.fubini_study_distance(x, y)


def cmd_dist(args):
    return {"distance": fmt(_dist(args.space, args.a, args.b))}


def cmd_geodesic(args):
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    (A, fa), (B, fb) = _point(args.a, args.space), _point(args.b, args.space)
    field = "complex" if "complex" in (fa, fb) else "real"
    kind = "pd" if args.space == "pn" else "density"
    if args.space == "pn":
        geo = geodesic_pn(A, B)

        def at(t):
            return geo(t), geo.velocity(t)
    else:
        geo = geodesic_dn(A, B)

        def at(t):
            return geo(t, args.arclength), geo.velocity(t, args.arclength)

    samples = []
    for k in range(args.steps + 1):
        t = k / args.steps
        P, dP = at(t)
        speed = np.sqrt(max(bw_metric(P, dP, dP), 0.0))
        samples.append({"t": fmt(t), "point": matrix_payload(P, kind, field), "speed": fmt(speed)})
    return samples


def _tangent_matrix(path, base, need_trace_free):
    H, _, _ = load_matrix(path)
    if H.shape != base.shape:
        raise ValidationError(f"{path}: dimension {H.shape[0]} does not match base", "shape")
    return as_trace_free(H, str(path)) if need_trace_free else as_hermitian(H, str(path))


def cmd_metric(args):
    if args.metric == "fisher":
        mu, _ = load_vector(args.base)
        mu = as_positive_measure(mu, str(args.base))
        h, _ = load_vector(args.h)
        k, _ = load_vector(args.k)
        return {"value": fmt(classical.fisher_metric(mu, h, k))}
    on_density = args.metric in ("sld", "bogoliubov")
    base, _ = _point(args.base, "dn" if on_density else "pn")
    H = _tangent_matrix(args.h, base, on_density)
    K = _tangent_matrix(args.k, base, on_density)
    fn = {
        "bw": bw_metric,
        "sld": qmetrics.sld_metric,
        "bogoliubov": qmetrics.bogoliubov_metric,
        "wy": qmetrics.wigner_yanase_metric,
        "gh": qmetrics.horizontal_metric_gh,
    }[args.metric]
    return {"value": fmt(fn(base, H, K))}


def cmd_batch_dist(args):
    folder = Path(args.dir)
    if not folder.is_dir():
        raise UsageError(f"{folder} is not a directory")
    paths = sorted(folder.glob("*.json"), key=lambda p: p.name)
    if not paths:
        raise UsageError(f"no .json files in {folder}")
    points = []
    for p in paths:
        try:
            points.append(_point(p, args.space)[0])
        except ValidationError as exc:
            raise ValidationError(f"{p.name}: {exc}", exc.invariant) from exc
    dist = bw_distance_pn if args.space == "pn" else bw_distance_dn
    n = len(points)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    D = np.zeros((n, n))
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        for (i, j), d in zip(pairs, pool.map(lambda ij: dist(points[ij[0]], points[ij[1]]), pairs)):
            D[i, j] = D[j, i] = fmt(d)
    return [p.name for p in paths], D


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol-pd",
        type=float,
        default=None,
        help="relative eigenvalue threshold for positive definiteness (default 1e-10)",
    )
    parser = argparse.ArgumentParser(
        prog="bwgeom", description="Bures-Wasserstein distances, geodesics and metrics."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="distance between two points")
    p.add_argument("--space", choices=DIST_SPACES, required=True)
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("geodesic", parents=[common], help="sample the geodesic between two points")
    p.add_argument("--space", choices=MATRIX_SPACES, required=True)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--arclength", action="store_true", help="sample uniformly in arc length")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("metric", parents=[common], help="inner product of two tangent vectors")
    p.add_argument("--metric", choices=METRICS, required=True)
    p.add_argument("base")
    p.add_argument("h")
    p.add_argument("k")

    p = sub.add_parser("batch-dist", parents=[common], help="pairwise distances of a directory of matrices")
    p.add_argument("--space", choices=MATRIX_SPACES, required=True)
    p.add_argument("--jobs", type=int, default=None, help="worker threads")
    p.add_argument("dir")
    return parser


def _emit(command, result, out):
    if command == "batch-dist":
        names, D = result
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(names)
        for row in D:
            writer.writerow([repr(float(v)) for v in row])
    else:
        out.write(json.dumps(result) + "\n")


COMMANDS = {
    "dist": cmd_dist,
    "geodesic": cmd_geodesic,
    "metric": cmd_metric,
    "batch-dist": cmd_batch_dist,
}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    overrides = {} if args.tol_pd is None else {"tol_pd": args.tol_pd}
    try:
        with tolerances(**overrides):
            result = COMMANDS[args.command](args)
    except (ParseError, UsageError) as exc:
        print(f"bwgeom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"bwgeom: invariant violated [{exc.invariant}]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"bwgeom: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except np.linalg.LinAlgError as exc:
        print(f"bwgeom: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    _emit(args.command, result, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
