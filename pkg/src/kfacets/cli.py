"""Batch command line interface.

Subcommands: gen, lift, count, certify, verify, formula, project, radon.
Reports are canonical JSON (sorted keys), so identical inputs and seeds give
bit-identical output; worker counts never change results.  ``verify`` exits
nonzero iff some check failed.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import combinations
from pathlib import Path

from . import facelab, facets, formulas, genpos, projection, serialize
from .errors import DegeneracyError, GenerationError, InputError
from .geometry import PointSet
from .liftmaps import circle_map, homogeneous_veronese, neighborly_embedding, veronese


def _workers_default() -> int | None:
    env = os.environ.get("KFL_WORKERS")
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise InputError(f"KFL_WORKERS must be an integer, got {env!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    ps = genpos.generate(args.mode, args.n, args.d, args.seed, args.coord_bound)
    _emit(serialize.dumps(serialize.point_set_to_json(ps)), args.out)
    return 0


def _cmd_lift(args) -> int:
    ps = serialize.load_point_set(args.infile)
    lifted = serialize.resolve_map(args.map).apply(ps)
    _emit(serialize.dumps(serialize.point_set_to_json(lifted)), args.out)
    return 0


def _cmd_count(args) -> int:
    ps = serialize.load_point_set(args.infile)
    if args.map:
        ps = serialize.resolve_map(args.map).apply(ps)
    workers = args.workers
    if args.mode == "facets":
        profile = facets.k_facet_profile(ps, workers)
        facet_list = (facets.enumerate_k_facets(ps, args.k, workers)
                      if args.k is not None else None)
        if args.csv:
            _emit(serialize.profile_to_csv(profile), args.out)
        else:
            _emit(serialize.dumps(
                serialize.facets_to_json(ps, profile=profile, facets=facet_list)),
                args.out)
        return 0
    if args.k is None:
        raise InputError("--mode sets requires --k")
    fam = facets.enumerate_k_sets(ps, args.k, workers)
    _emit(serialize.dumps(serialize.facets_to_json(ps, ksets=fam)), args.out)
    return 0


def _cmd_certify(args) -> int:
    ps = serialize.load_point_set(args.infile)
    if args.map:
        ps = serialize.resolve_map(args.map).apply(ps)
    subset = tuple(int(t) for t in args.subset.split(","))
    cert = facelab.face_certificate(ps, subset, strict=not args.weak)
    obj = {"subset": list(subset),
           "certificate": serialize.certificate_to_json(cert) if cert else None}
    _emit(serialize.dumps(obj), args.out)
    return 0


def _cmd_project(args) -> int:
    ps = serialize.load_point_set(args.infile)
    through = projection.facets_through_vertex(ps, args.vertex, args.k, args.workers)
    image = projection.stereographic_project(ps, args.vertex)
    image_count = facets.k_facet_profile(image, args.workers).e[args.k]
    obj = {
        "vertex": args.vertex,
        "k": args.k,
        "facets_through_vertex": through,
        "projected_e_k": image_count,
        "pass": through == image_count,
    }
    _emit(serialize.dumps(obj), args.out)
    return 0 if obj["pass"] else 1


def _cmd_radon(args) -> int:
    ps = serialize.load_point_set(args.infile)
    witness = facelab.radon_partition(ps)
    _emit(serialize.dumps(serialize.radon_to_json(witness)), args.out)
    return 0


def _cmd_formula(args) -> int:
    spec = formulas.FORMULAS.get(args.name)
    if spec is None:
        raise InputError(
            f"unknown formula {args.name!r}; known: {', '.join(sorted(formulas.FORMULAS))}")
    if args.k_range:
        lo, hi = (int(t) for t in args.k_range.split(":"))
        if spec.params[-1] != "k":
            raise InputError(f"{spec.name} has no k parameter to range over")
        fixed = [int(v) for v in args.args]
        if len(fixed) != len(spec.params) - 1:
            raise InputError(
                f"{spec.name} needs values for {spec.params[:-1]}, got {fixed}")
        lines = ["k,value"]
        for k in range(lo, hi + 1):
            lines.append(f"{k},{spec.fn(*fixed, k)}")
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    values = [int(v) for v in args.args]
    if len(values) != len(spec.params):
        raise InputError(f"{spec.name} takes {spec.params}, got {values}")
    _emit(f"{spec.fn(*values)}\n", args.out)
    return 0


# --- verify -------------------------------------------------------------------

def _report(theorem: str, params: dict, seed: int, expected, measured,
            instance: PointSet | None) -> dict:
    ok = expected == measured
    obj = {
        "theorem": theorem,
        "params": params,
        "seed": seed,
        "expected": expected,
        "measured": measured,
        "pass": ok,
    }
    if not ok and instance is not None:
        obj["instance"] = serialize.point_set_to_json(instance)
    return obj


def _verify_circles(n: int, seed: int, workers) -> dict:
    if n < 5 or n % 2 == 0:
        raise InputError("circles needs odd n >= 5")
    ps = genpos.map_generic_set(n, circle_map(), seed)
    lifted = circle_map().apply(ps)
    profile = facets.k_facet_profile(lifted, workers)
    m = (n - 1) // 2
    expected = {
        "profile": [formulas.circle_count(n, k) for k in range(n - 2)],
        "halving": m * m,
    }
    measured = {
        "profile": list(profile.e),
        "halving": facets.count_unoriented_halving(lifted, workers),
    }
    return _report("circles", {"n": n}, seed, expected, measured, ps)


def _verify_conics(n: int, seed: int, workers) -> dict:
    if n < 6:
        raise InputError("conics needs n >= 6")
    ps = genpos.map_generic_set(n, veronese(2, 2), seed)
    profile = facets.k_facet_profile(veronese(2, 2).apply(ps), workers)
    expected = [formulas.conic_count(n, k) for k in range(n - 4)]
    return _report("conics", {"n": n}, seed, expected, list(profile.e), ps)


def _verify_homogeneous(n: int, m: int, seed: int, workers) -> dict:
    lift = homogeneous_veronese(2, m)
    if n <= m + 1:
        raise InputError(f"homogeneous needs n > m + 1 = {m + 1}")
    ps = genpos.map_generic_set(n, lift, seed, require_source_glp=False,
                                no_common_origin_line=True)
    profile = facets.k_facet_profile(lift.apply(ps), workers)
    expected = [formulas.homogeneous_count(n, m, k) for k in range(n - m)]
    return _report("homogeneous", {"n": n, "m": m}, seed, expected,
                   list(profile.e), ps)


def _verify_veronese_neighborly(n: int, m: int, seed: int, workers) -> dict:
    if m < 2 or m % 2:
        raise InputError("veronese-neighborly needs even m >= 2")
    half = m // 2
    target = formulas.binom(half + 2, half) - 1
    if m == 2:
        ps = genpos.random_point_set(n, 2, seed)
    else:
        ps = genpos.map_generic_set(n, veronese(2, half), seed)
    lifted = veronese(2, m).apply(ps)
    cap = min(target, n - 1)
    measured = {"degree": facelab.neighborliness_degree(lifted, cap)}
    expected = {"degree": cap}
    if m == 2:
        # squared-line certificates must agree with the LP on every pair
        agree = all(
            facelab.conic_edge_certificate(ps.points[i], ps.points[j])
            .validate(lifted, (i, j))
            for i, j in combinations(range(n), 2)
        )
        expected["pair_certificates"] = True
        measured["pair_certificates"] = agree
    return _report("veronese-neighborly", {"n": n, "m": m}, seed,
                   expected, measured, ps)


def _verify_embedding(k: int, d: int, n: int, seed: int, workers) -> dict:
    ps = genpos.distinct_first_coordinate_set(n, d, seed)
    lift = neighborly_embedding(k, d)
    lifted = lift.apply(ps)
    degree = facelab.neighborliness_degree(lifted, min(k, n - 1))
    certs_ok = all(
        facelab.embedding_face_certificate(ps, subset, k).validate(lifted, subset)
        for subset in combinations(range(n), min(k, n - 1))
    )
    expected = {"degree": min(k, n - 1), "certificates": True}
    measured = {"degree": degree, "certificates": certs_ok}
    return _report("embedding", {"k": k, "d": d, "n": n}, seed,
                   expected, measured, ps)


def _verify_projection(n: int, d: int, seed: int, workers) -> dict:
    ps = genpos.convex_position_set(n, d, seed)
    profile = facets.k_facet_profile(ps, workers)
    mismatches = []
    for v in range(n):
        image = projection.stereographic_project(ps, v)
        image_profile = facets.k_facet_profile(image, workers)
        for k in range(n - d + 1):
            through = projection.facets_through_vertex(ps, v, k)
            if through != image_profile.e[k]:
                mismatches.append({"vertex": v, "k": k, "through": through,
                                   "projected": image_profile.e[k]})
    sums_ok = all(
        sum(projection.facets_through_vertex(ps, v, k) for v in range(n))
        == d * profile.e[k]
        for k in range(n - d + 1)
    )
    expected = {"mismatches": [], "sum_identity": True}
    measured = {"mismatches": mismatches, "sum_identity": sums_ok}
    return _report("projection", {"n": n, "d": d}, seed, expected, measured, ps)


def _verify_radon(d: int, seed: int, workers) -> dict:
    ps = genpos.random_point_set(d + 2, d, seed)
    witness = facelab.radon_partition(ps)
    q = PointSet(ps.dim, ps.subset(witness.part_q))
    r = PointSet(ps.dim, ps.subset(witness.part_r))
    measured = {
        "witness_valid": witness.validate(ps),
        "weak_separation": facelab.weak_separation(q, r) is not None,
    }
    expected = {"witness_valid": True, "weak_separation": False}
    return _report("radon", {"d": d}, seed, expected, measured, ps)


def _verify_weakly(k: int, seed: int, workers) -> dict:
    n, d = 2 * k + 1, 2 * k - 1
    ps = genpos.random_point_set(n, d, seed)
    ok, failing = facelab.is_weakly_k_neighborly(ps, k)
    measured = {"weakly_k_neighborly": ok}
    expected = {"weakly_k_neighborly": False}
    return _report("weakly", {"k": k}, seed, expected, measured, ps)


# theorem name -> (checker, parameter names pulled from the CLI namespace)
VERIFIERS = {
    "circles": (lambda n, seed, workers=None: _verify_circles(n, seed, workers),
                ("n",)),
    "conics": (lambda n, seed, workers=None: _verify_conics(n, seed, workers),
               ("n",)),
    "homogeneous": (lambda n, m, seed, workers=None:
                    _verify_homogeneous(n, m, seed, workers), ("n", "m")),
    "veronese-neighborly": (lambda n, m, seed, workers=None:
                            _verify_veronese_neighborly(n, m, seed, workers),
                            ("n", "m")),
    "embedding": (lambda k, d, n, seed, workers=None:
                  _verify_embedding(k, d, n, seed, workers), ("k", "d", "n")),
    "projection": (lambda n, d, seed, workers=None:
                   _verify_projection(n, d, seed, workers), ("n", "d")),
    "radon": (lambda d, seed, workers=None: _verify_radon(d, seed, workers),
              ("d",)),
    "weakly": (lambda k, seed, workers=None: _verify_weakly(k, seed, workers),
               ("k",)),
}


def run_verifier(theorem: str, seed: int, workers: int | None = None, **params) -> dict:
    """Programmatic entry to the theorem checkers; returns the JSON report."""
    entry = VERIFIERS.get(theorem)
    if entry is None:
        raise InputError(f"unknown theorem {theorem!r}")
    fn, names = entry
    unknown = set(params) - set(names)
    if unknown:
        raise InputError(f"{theorem} does not take {sorted(unknown)}")
    return fn(seed=seed, workers=workers, **params)


def _cmd_verify(args) -> int:
    entry = VERIFIERS.get(args.theorem)
    if entry is None:
        raise InputError(f"unknown theorem {args.theorem!r}")
    fn, names = entry
    kwargs = {name: getattr(args, name) for name in names}
    report = fn(seed=args.seed, workers=args.workers, **kwargs)
    _emit(serialize.dumps(report), args.out)
    return 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kfacets",
        description="Exact k-set / k-facet enumeration of lifted point sets")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--workers", type=int, default=_workers_default(),
                       help="parallel workers (default: KFL_WORKERS or serial)")

    p = sub.add_parser("gen", help="generate a seeded point set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", default="glp",
                   help="glp | conic | hom:<m> | convex | distinct-x1")
    p.add_argument("--coord-bound", type=int, default=None)
    add_common(p)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("lift", help="apply a lifting map to a point set file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--map", required=True,
                   help="veronese:d:m | hveronese:d:m | circle | moment:d | embed:k:d | custom:<file>")
    add_common(p)
    p.set_defaults(fn=_cmd_lift)

    p = sub.add_parser("count", help="enumerate k-facets or k-sets")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--map", default=None, help="optional lift before counting")
    p.add_argument("--mode", choices=["facets", "sets"], default="facets")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--csv", action="store_true", help="emit the profile as CSV")
    add_common(p)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("certify", help="face certificate for a subset")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--map", default=None)
    p.add_argument("--subset", required=True, help="comma-separated indices")
    p.add_argument("--weak", action="store_true")
    add_common(p)
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("project", help="stereographic projection count check")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_common(p)
    p.set_defaults(fn=_cmd_project)

    p = sub.add_parser("radon", help="radon partition of dim + 2 points")
    p.add_argument("--in", dest="infile", required=True)
    add_common(p)
    p.set_defaults(fn=_cmd_radon)

    p = sub.add_parser("formula", help="evaluate a count formula")
    p.add_argument("name")
    p.add_argument("args", nargs="*")
    p.add_argument("--k-range", default=None, help="A:B inclusive; emit CSV over k")
    add_common(p)
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("verify", help="check a theorem on a seeded instance")
    p.add_argument("theorem", choices=[
        "circles", "conics", "homogeneous", "veronese-neighborly",
        "embedding", "projection", "radon", "weakly"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    add_common(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, DegeneracyError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
