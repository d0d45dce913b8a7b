"""Reads `table quartics --format json` on stdin and checks the table relations exactly."""
import json
import sys
from fractions import Fraction


def poly(j):
    return {tuple(t["exps"]): Fraction(t["coeff"]) for t in j["terms"]}


def combine(*pairs):
    out = {}
    for scale, p in pairs:
        for k, v in p.items():
            out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v != 0}


rows = {r["id"]: r for r in json.load(sys.stdin)["rows"]}
p = {k: poly(r["p"]) for k, r in rows.items()}
assert p["flex"] == combine((1, p["AN"]), (2, p["D6"])), "flex != AN + 2 D6"
assert combine((4, p["D4"])) == combine((8, p["A6"]), (-1, p["quadrilateral"])), "4 D4 != 8 A6 - Q"
assert p["general"] == combine((8, p["A6"])), "general != 8 A6"
assert all(r["provenance"] for r in rows.values()), "missing provenance"
assert rows["general"]["predegree"] == "14280"
print("ok")
