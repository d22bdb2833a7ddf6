"""JSON export and validated import of matrix realizations (entries "a/b+c/d*i")."""
from __future__ import annotations

from ..exact import GMatrix
from ..weights import format_weight, parse_weight
from .realization import RepInvariantError, RepRealization, pairs

SCHEMA = "weitzenboeck/1"


def rep_to_json(rep: RepRealization) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "representation",
        "n": rep.n,
        "rho": [str(x) for x in rep.rho.entries],
        "dim": rep.dim,
        "label": rep.label,
        "gram": rep.gram.to_strings(),
        "generators": [
            {"i": i + 1, "j": j + 1, "matrix": rep.generators[(i, j)].to_strings()} for i, j in pairs(rep.n)
        ],
    }


def rep_from_json(doc: dict) -> RepRealization:
    """Rebuild a realization and re-check every invariant before returning it."""
    if doc.get("schema") != SCHEMA or doc.get("kind") != "representation":
        raise RepInvariantError("not a representation document")
    n = int(doc["n"])
    rho = parse_weight(",".join(doc["rho"]), n)
    gens = {}
    for entry in doc["generators"]:
        gens[(int(entry["i"]) - 1, int(entry["j"]) - 1)] = GMatrix.from_strings(entry["matrix"])
    if set(gens) != set(pairs(n)):
        raise RepInvariantError("generator list is incomplete")
    rep = RepRealization(n, gens, GMatrix.from_strings(doc["gram"]), doc.get("label", format_weight(rho.entries)),
                         rho=rho)
    if rep.dim != int(doc["dim"]):
        raise RepInvariantError("declared dimension differs from the matrices")
    return rep.validate()
