"""JSON and CSV interchange for point sets, maps, certificates, and reports.

Coordinates serialize as exact strings ("3", "-3/4"); decimals in input
parse exactly (0.25 becomes 1/4).  CSV point files use an x1..xp header row.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .facelab import FaceCertificate, RadonWitness
from .facets import KFacetProfile, KSetFamily, OrientedFacet
from .geometry import Hyperplane, PointSet, format_rational, point_set, rational
from .liftmaps import MonomialMap, map_from_key


def point_set_to_json(ps: PointSet) -> dict:
    obj = {
        "dim": ps.dim,
        "points": [[format_rational(c) for c in pt] for pt in ps.points],
    }
    if ps.labels is not None:
        obj["labels"] = list(ps.labels)
    return obj


def point_set_from_json(obj: dict) -> PointSet:
    try:
        dim = int(obj["dim"])
        rows = obj["points"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad point set JSON: {exc}") from exc
    ps = point_set(rows, labels=obj.get("labels"))
    if ps.dim != dim:
        raise InputError(f"declared dim {dim} != coordinate width {ps.dim}")
    return ps


def point_set_to_csv(ps: PointSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([f"x{i + 1}" for i in range(ps.dim)])
    for pt in ps.points:
        writer.writerow([format_rational(c) for c in pt])
    return buf.getvalue()


def point_set_from_csv(text: str) -> PointSet:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        raise InputError("empty CSV")
    header = [h.strip() for h in rows[0]]
    expected = [f"x{i + 1}" for i in range(len(header))]
    if header != expected:
        raise InputError(f"CSV header must be {','.join(expected)}, got {','.join(header)}")
    return point_set(rows[1:])


def load_point_set(path: str | Path) -> PointSet:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".csv":
        return point_set_from_csv(text)
    return point_set_from_json(json.loads(text))


def save_point_set(ps: PointSet, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        path.write_text(point_set_to_csv(ps))
    else:
        path.write_text(json.dumps(point_set_to_json(ps), indent=2) + "\n")


def map_to_json(mmap: MonomialMap) -> dict:
    return {
        "source_dim": mmap.source_dim,
        "coords": [
            [{"exps": list(exps), "coef": str(coef)} for coef, exps in terms]
            for terms in mmap.coords
        ],
    }


def map_from_json(obj: dict) -> MonomialMap:
    try:
        coords = tuple(
            tuple((int(term["coef"]), tuple(int(e) for e in term["exps"]))
                  for term in terms)
            for terms in obj["coords"]
        )
        return MonomialMap(source_dim=int(obj["source_dim"]), coords=coords)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad map JSON: {exc}") from exc


def resolve_map(key: str) -> MonomialMap:
    """Map keys as in liftmaps.map_from_key, plus custom:<file> JSON maps."""
    if key.startswith("custom:"):
        path = key.split(":", 1)[1]
        return map_from_json(json.loads(Path(path).read_text()))
    return map_from_key(key)


def hyperplane_to_json(h: Hyperplane) -> dict:
    return {
        "normal": [format_rational(c) for c in h.normal],
        "offset": format_rational(h.offset),
    }


def certificate_to_json(cert: FaceCertificate) -> dict:
    obj = hyperplane_to_json(cert.hyperplane)
    obj["strict"] = cert.strict
    return obj


def certificate_from_json(obj: dict) -> FaceCertificate:
    try:
        h = Hyperplane(tuple(rational(c) for c in obj["normal"]),
                       rational(obj["offset"]))
        return FaceCertificate(hyperplane=h, strict=bool(obj["strict"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad certificate JSON: {exc}") from exc


def radon_to_json(w: RadonWitness) -> dict:
    return {
        "Q": list(w.part_q),
        "R": list(w.part_r),
        "lambdas": [format_rational(v) for v in w.lambdas],
        "point": [format_rational(c) for c in w.common_point],
    }


def facets_to_json(ps: PointSet, profile: KFacetProfile | None = None,
                   facets: list[OrientedFacet] | None = None,
                   ksets: KSetFamily | None = None) -> dict:
    obj: dict = {"n": ps.n, "p": ps.dim}
    if profile is not None:
        obj["profile"] = list(profile.e)
    if facets is not None:
        obj["facets"] = [
            {"indices": list(f.indices), "sign": f.sign, "k": f.k} for f in facets
        ]
    if ksets is not None:
        obj["k"] = ksets.k
        obj["ksets"] = [list(s) for s in ksets.sets]
    return obj


def profile_to_csv(profile: KFacetProfile) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["k", "e_k"])
    for k, count in enumerate(profile.e):
        writer.writerow([k, count])
    return buf.getvalue()


def dumps(obj: dict) -> str:
    """Canonical JSON: sorted keys, no whitespace drift, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
