"""JSON encodings.  Every scalar is a string (``"p/q"`` or ``"n"``)."""
from __future__ import annotations

import json

from .curves import CurveProfile
from .errors import SymprodError
from .irrationality import BoundInterval
from .linalg import QQ, PrimeField, format_rational, parse_rational
from .nefcone import CertReport
from .projective import PluckerVector, Subspace, make_subspace, plucker_subsets
from .special_position import Configuration, NotSpecial, Special, Undecided

__all__ = [
    "field_to_json",
    "field_from_json",
    "subspace_to_json",
    "subspace_from_json",
    "config_to_json",
    "config_from_json",
    "certificate_to_json",
    "certificate_from_json",
    "plucker_to_json",
    "profile_to_json",
    "profile_from_json",
    "interval_to_json",
    "cert_report_to_json",
    "cert_report_from_json",
    "dumps",
    "load_config",
    "save_config",
]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def field_to_json(field):
    return "rational" if field == QQ else {"prime": field.p}


def field_from_json(obj):
    if obj in (None, "rational"):
        return QQ
    if isinstance(obj, dict) and set(obj) == {"prime"}:
        return PrimeField(obj["prime"])
    raise SymprodError(f"unknown field {obj!r}")


def _row(row):
    return [format_rational(x) for x in row]


def _scalar(x, field):
    if isinstance(x, float):
        raise SymprodError("floating-point scalars are not accepted")
    return field(parse_rational(x))


def subspace_to_json(s: Subspace) -> dict:
    return {"ambient_n": s.ambient_n, "rows": [_row(r) for r in s.rows]}


def subspace_from_json(obj: dict, field=QQ) -> Subspace:
    n = obj["ambient_n"]
    return make_subspace(n, [[_scalar(x, field) for x in r] for r in obj["rows"]], field)


def config_to_json(c: Configuration) -> dict:
    return {
        "n": c.n,
        "k": c.k,
        "field": field_to_json(c.field),
        "subspaces": [[_row(r) for r in s.rows] for s in c.subspaces],
    }


def config_from_json(obj: dict) -> Configuration:
    try:
        field = field_from_json(obj.get("field", "rational"))
        n, k = int(obj["n"]), int(obj["k"])
        rows = [[[_scalar(x, field) for x in r] for r in sub] for sub in obj["subspaces"]]
    except (KeyError, TypeError) as exc:
        raise SymprodError(f"malformed configuration: {exc}") from exc
    return Configuration.from_rows(n, k, rows, field)


def certificate_to_json(cert) -> dict:
    if isinstance(cert, Special):
        return {"verdict": cert.verdict, "dependencies": [_row(r) for r in cert.dependencies]}
    if isinstance(cert, NotSpecial):
        return {"verdict": cert.verdict, "excluded_index": cert.excluded_index,
                "witness": subspace_to_json(cert.witness)}
    return {"verdict": cert.verdict, "trials_used": cert.trials_used}


def certificate_from_json(obj: dict, field=QQ):
    verdict = obj.get("verdict")
    if verdict == "special":
        return Special(tuple(tuple(_scalar(x, field) for x in r) for r in obj["dependencies"]))
    if verdict == "not_special":
        return NotSpecial(int(obj["excluded_index"]), subspace_from_json(obj["witness"], field))
    if verdict == "undecided":
        return Undecided(int(obj["trials_used"]))
    raise SymprodError(f"unknown verdict {verdict!r}")


def plucker_to_json(p: PluckerVector) -> dict:
    return {
        "ambient_n": p.ambient_n,
        "k": p.k,
        "subsets": [list(s) for s in plucker_subsets(p.ambient_n, p.k)],
        "coords": _row(p.coords),
    }


def profile_to_json(p: CurveProfile) -> dict:
    return {
        "genus": p.genus,
        "class": p.curve_class,
        "gonality": p.gonality,
        "delta": {str(m): v for m, v in sorted(p.delta.items())},
        "elliptic_cover_degree": p.elliptic_cover_degree,
    }


def profile_from_json(obj: dict) -> CurveProfile:
    return CurveProfile(
        int(obj["genus"]),
        obj.get("class", "arbitrary"),
        obj.get("gonality"),
        {int(m): int(v) for m, v in (obj.get("delta") or {}).items()},
        obj.get("elliptic_cover_degree"),
    )


def interval_to_json(b: BoundInterval) -> dict:
    return {"lo": b.lo, "hi": b.hi, "exact": b.exact,
            "provenance": list(b.provenance), "notes": list(b.notes)}


def cert_report_to_json(r: CertReport) -> dict:
    evidence = r.evidence
    if evidence != "discriminant":
        evidence = {"checked_points": [str(m) for m in evidence]}
    return {
        "valid": r.valid,
        "g": r.g,
        "a": str(r.a),
        "b": str(r.b),
        "c": str(r.c),
        "tau_prev": format_rational(r.tau_prev),
        "ratio": format_rational(r.ratio),
        "l_squared": str(r.l_squared),
        "quadratic": [str(x) for x in r.quadratic],
        "discriminant": str(r.discriminant),
        "evidence": evidence,
        "failed_check": r.failed_check,
        "advisory": r.advisory,
    }


def _reject_float(text):
    raise SymprodError(f"floating-point literal {text} is not accepted")


def load_config(path) -> Configuration:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh, parse_float=_reject_float)
        except json.JSONDecodeError as exc:
            raise SymprodError(f"{path}: invalid JSON ({exc})") from exc
    return config_from_json(obj)


def save_config(c: Configuration, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(config_to_json(c)))



def cert_report_from_json(obj: dict) -> CertReport:
    evidence = obj["evidence"]
    if evidence != "discriminant":
        evidence = tuple(int(m) for m in evidence["checked_points"])
    return CertReport(
        valid=bool(obj["valid"]),
        g=int(obj["g"]),
        a=int(obj["a"]),
        b=int(obj["b"]),
        c=int(obj["c"]),
        tau_prev=parse_rational(obj["tau_prev"]),
        ratio=parse_rational(obj["ratio"]),
        l_squared=int(obj["l_squared"]),
        quadratic=tuple(int(x) for x in obj["quadratic"]),
        discriminant=int(obj["discriminant"]),
        evidence=evidence,
        failed_check=obj.get("failed_check"),
        advisory=bool(obj.get("advisory", False)),
    )
