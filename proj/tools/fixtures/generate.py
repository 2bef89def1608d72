#!/usr/bin/env python3
"""Writes the example fixtures under fixtures/.

Every table is computed from an explicit model of the space and map:
fixed points are solved exactly on piecewise linear lifts and the shift
of each fixed point is read off from the lift.
"""
import json
import sys
from fractions import Fraction as F
from pathlib import Path

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[2] / "fixtures"


def fin(*terms):
    """Finite group ring element from (name, coeff) pairs."""
    out = {}
    for name, c in terms:
        out[name] = out.get(name, 0) + c
    return {k: v for k, v in out.items() if v}


def lat(*terms):
    """Lattice group ring element from (name, vector, coeff) triples."""
    return [{"q": q, "v": list(v), "c": c} for q, v, c in terms]


def frac(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write(name, doc):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


Z2 = {"names": ["e", "t"], "cayley": [[0, 1], [1, 0]]}


# circle with the half turn, lifted to the line; t is x -> x + 1/2, t*t = translation by 1
def circle_z2(d):
    cells = []
    for k in range(d):
        cells.append(("e", [k // 2], 1) if k % 2 == 0 else ("t", [(k - 1) // 2], 1))
    comp = {
        "id": "free",
        "isotropy": [],
        "pi1": {"rank": 1, "cocycle": [{"g": "t", "h": "t", "v": [1]}]},
        "chain_ranks": [1, 1],
        "boundaries": [{"degree": 1, "matrix": [[lat(("t", [0], 1), ("e", [0], -1))]]}],
    }
    fixed, reid = [], []
    n = 2 * (d - 1)
    for k in range(n):
        x = F(k, n)
        q, v = ("e", k // 2) if k % 2 == 0 else ("t", (k - 1) // 2)
        fixed.append({"component": "free", "element": q, "index": -1, "note": frac(x)})
        reid.append({"component": "free", "element": {"q": q, "v": [v]}, "index": -1, "note": frac(x)})
    return {
        "schema_version": 1,
        "metadata": {"name": f"circle_z2_deg{d}", "space": "S^1 with Z/2 acting by x -> x + 1/2",
                     "map": f"x -> {d}x"},
        "group": Z2,
        "components": [comp],
        "map": {"free": {
            "self_mapped": True,
            "twist": {"lattice": [[d]], "offsets": {"t": [(d - 1) // 2]}},
            "matrices": [[[lat(("e", [0], 1))]], [[lat(*cells)]]],
        }},
        "fixed_points": fixed,
        "reidemeister_fixed_points": reid,
        "phi": [],
    }


# equator of S^2 fixed by the reflection, degree 3 on the circle
def equator(cid):
    e = lambda v, c=1: ("e", [v], c)
    return {
        "id": cid,
        "isotropy": ["t"],
        "pi1": {"rank": 1},
        "chain_ranks": [2, 2],
        "boundaries": [{"degree": 1, "matrix": [[lat(e(0, -1)), lat(e(1))], [lat(e(0)), lat(e(0, -1))]]}],
    }, {
        "self_mapped": True,
        "twist": {"lattice": [[3]]},
        "matrices": [
            [[lat(e(0)), []], [[], lat(e(1))]],
            [[lat(e(0), e(1)), lat(e(2))], [lat(e(0)), lat(e(1), e(2))]],
        ],
    }


def s2_z2(flip):
    g = "t" if flip else "e"
    eq, eqmap = equator("a1")
    free = {
        "id": "a2",
        "isotropy": [],
        "chain_ranks": [1, 2, 2],
        "boundaries": [
            {"degree": 1, "matrix": [[fin(("e", 1)), fin(("e", 1))]]},
            {"degree": 2, "matrix": [[fin(("e", -1)), fin(("e", 1))], [fin(("e", 1)), fin(("e", -1))]]},
        ],
    }
    freemap = {
        "self_mapped": True,
        "matrices": [
            [[fin((g, 1))]],
            [[fin((g, 1)), {}], [{}, fin((g, 1))]],
            [[fin((g, 2)), fin((g, 1))], [fin((g, 1)), fin((g, 2))]],
        ],
    }
    rows = [
        {"component": "a1", "element": "e", "index": -1, "note": "(0,1/2)"},
        {"component": "a1", "element": "e", "index": -1, "note": "(1/2,1/2)"},
        {"component": "a2", "element": g, "index": 3, "note": "(t,0)"},
        {"component": "a2", "element": g, "index": 3, "note": "(t,1)"},
    ]
    reid = [
        {"component": "a1", "element": {"q": "e", "v": [0]}, "index": -1, "note": "(0,1/2)"},
        {"component": "a1", "element": {"q": "e", "v": [1]}, "index": -1, "note": "(1/2,1/2)"},
        rows[2], rows[3],
    ]
    return {
        "schema_version": 1,
        "metadata": {"name": "s2_z2_map2" if flip else "s2_z2_map1",
                     "space": "S^2 with Z/2 acting by (x,y) -> (x,1-y)",
                     "map": "(3x, 1-psi(y))" if flip else "(3x, psi(y))"},
        "group": Z2,
        "components": [eq, free],
        "map": {"a1": eqmap, "a2": freemap},
        "fixed_points": rows,
        "reidemeister_fixed_points": reid,
        "phi": [{"source": "a1", "target": "a2", "copies": [{}]}],
    }


def s2_z3():
    group = {"names": ["e", "g", "g2"], "cayley": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}
    pole = lambda cid: {"id": cid, "isotropy": ["g"], "chain_ranks": [1]}
    ident = {"self_mapped": True, "matrices": [[[fin(("e", 1))]]]}
    free = {
        "id": "a3",
        "isotropy": [],
        "chain_ranks": [0, 1, 1],
        "boundaries": [{"degree": 2, "matrix": [[fin(("g", 1), ("e", -1))]]}],
    }
    freemap = {"self_mapped": True,
               "matrices": [[], [[fin(("e", 1))]], [[fin(("e", 2), ("g", 1), ("g2", 1))]]]}
    rows = [
        {"component": "a1", "element": "e", "index": 1, "note": "(t,0)"},
        {"component": "a2", "element": "e", "index": 1, "note": "(t,1)"},
    ]
    # (x,y).g = (x + 1/3, y); 4x = x + k/3 has shift g^k
    for k in range(3):
        for j in range(3):
            x = F(3 * j + k, 9)
            rows.append({"component": "a3", "element": ["e", "g", "g2"][k], "index": 1,
                         "note": f"({frac(x)},1/2)"})
    return {
        "schema_version": 1,
        "metadata": {"name": "s2_z3", "space": "S^2 with Z/3 rotating by 1/3", "map": "(4x, psi(y))"},
        "group": group,
        "components": [pole("a1"), pole("a2"), free],
        "map": {"a1": ident, "a2": ident, "a3": freemap},
        "fixed_points": rows,
        "reidemeister_fixed_points": rows,
        "phi": [{"source": "a1", "target": "a3", "copies": [{}]},
                {"source": "a2", "target": "a3", "copies": [{}]}],
    }


def torus_z2():
    c1, m1 = equator("a1")
    c2, m2 = equator("a2")
    t = lambda x, c=1: ("e", [x, 0], c)
    free = {
        "id": "a3",
        "isotropy": [],
        "pi1": {"rank": 2, "action": {"t": [[1, 0], [0, -1]]}},
        "chain_ranks": [0, 2, 2],
        "boundaries": [{"degree": 2, "matrix": [[lat(t(0, -1)), lat(t(1))], [lat(t(0)), lat(t(0, -1))]]}],
    }
    freemap = {
        "self_mapped": True,
        "twist": {"lattice": [[3, 0], [0, 1]]},
        "matrices": [
            [],
            [[lat(t(0)), []], [[], lat(t(1))]],
            [[lat(t(0), t(1)), lat(t(2))], [lat(t(0)), lat(t(1), t(2))]],
        ],
    }
    rows, reid = [], []
    for cid, y in (("a1", "0"), ("a2", "1/2")):
        for v, x in ((0, "0"), (1, "1/2")):
            rows.append({"component": cid, "element": "e", "index": -1, "note": f"({x},{y})"})
            reid.append({"component": cid, "element": {"q": "e", "v": [v]}, "index": -1, "note": f"({x},{y})"})
    for v, x in ((0, "0"), (1, "1/2")):
        for y in ("1/4", "3/4"):
            rows.append({"component": "a3", "element": "e", "index": 1, "note": f"({x},{y})"})
            reid.append({"component": "a3", "element": {"q": "e", "v": [v, 0]}, "index": 1, "note": f"({x},{y})"})
    incl = {"lattice_map": [[1], [0]], "offset": [0, 0]}
    return {
        "schema_version": 1,
        "metadata": {"name": "torus_z2", "space": "T^2 with Z/2 acting by (s,t) -> (s,1-t)",
                     "map": "(3x, psi(y))"},
        "group": Z2,
        "components": [c1, c2, free],
        "map": {"a1": m1, "a2": m2, "a3": freemap},
        "fixed_points": rows,
        "reidemeister_fixed_points": reid,
        "phi": [{"source": "a1", "target": "a3", "copies": [incl]},
                {"source": "a2", "target": "a3", "copies": [incl]}],
    }


# S_3 acting on the circle through affine maps x -> eps*x + s of the line
S3 = {"e": (1, F(0)), "a": (1, F(1, 3)), "a2": (1, F(2, 3)),
      "b": (-1, F(0)), "ba": (-1, F(1, 3)), "ba2": (-1, F(2, 3))}
S3_NAMES = list(S3)


def s3_mul(x, y):
    ex, sx = S3[x]
    ey, sy = S3[y]
    r = (ex * ey, (ey * sx + sy) % 1)
    return next(n for n, v in S3.items() if v == r)


def s3_cocycle(x, y):
    ex, sx = S3[x]
    ey, sy = S3[y]
    exy, sxy = S3[s3_mul(x, y)]
    c = exy * (ey * sx + sy - sxy)
    assert c.denominator == 1
    return int(c)


# lift of the degree 4 map on [0,1/3): pieces (lo, hi, slope, intercept)
S3_PIECES = [
    (F(0), F(1, 18), 0, F(0)),
    (F(1, 18), F(1, 9), 12, F(-2, 3)),
    (F(1, 9), F(2, 9), 0, F(2, 3)),
    (F(2, 9), F(5, 18), 12, F(-2)),
    (F(5, 18), F(1, 3), 0, F(4, 3)),
]
S3_SPECIAL = {F(0): "a1", F(1, 2): "a2", F(2, 3): "a3", F(1, 6): "a4", F(1, 3): "a5", F(5, 6): "a6"}


def s3_lift(x):
    k = (x * 3) // 1
    y = x - F(k, 3)
    for lo, hi, m, c in S3_PIECES:
        if lo <= y < hi:
            return m * y + c + F(4 * k, 3)
    raise AssertionError


def s3_fixed_points():
    """All x in [0,1) and (q,v) with lift(x) = eps_q (x + v) + s_q."""
    out = []
    for k in range(3):
        for lo, hi, m, c in S3_PIECES:
            lo, hi, c = lo + F(k, 3), hi + F(k, 3), c + F(4 * k, 3) - m * F(k, 3)
            for q, (eps, s) in S3.items():
                for v in range(-20, 21):
                    x = (eps * v + s - c) / (m - eps)
                    if lo <= x < hi:
                        assert s3_lift(x) == eps * (x + v) + s
                        out.append((x, q, v, 1 if 1 - eps * m > 0 else -1))
    return sorted(out)


def circle_s3():
    group = {"names": S3_NAMES, "cayley": [[S3_NAMES.index(s3_mul(x, y)) for y in S3_NAMES] for x in S3_NAMES]}
    cocycle = []
    for x in S3_NAMES:
        for y in S3_NAMES:
            c = s3_cocycle(x, y)
            if c:
                cocycle.append({"g": x, "h": y, "v": [c]})
    comps, maps = [], {}
    iso = {"a1": "b", "a2": "b", "a3": "ba", "a4": "ba", "a5": "ba2", "a6": "ba2"}
    for cid, h in iso.items():
        comps.append({"id": cid, "isotropy": [h], "chain_ranks": [1]})
        fixed = cid in ("a1", "a3", "a5")
        maps[cid] = {"self_mapped": fixed, "matrices": [[[fin(("e", 1))]]] if fixed else []}
    comps.append({
        "id": "a7",
        "isotropy": [],
        "pi1": {"rank": 1, "action": {q: [[S3[q][0]]] for q in S3_NAMES}, "cocycle": cocycle},
        "chain_ranks": [0, 1],
    })
    # [0,1/6] runs to [0,2/3] in the cover
    maps["a7"] = {
        "self_mapped": True,
        "twist": {"lattice": [[4]], "offsets": {"a": [1], "a2": [2], "b": [0], "ba": [-1], "ba2": [-2]}},
        "matrices": [[], [[lat(("e", [0], 1), ("ba", [0], -1), ("a", [0], 1), ("ba2", [0], -1))]]],
    }
    rows, reid, seen = [], [], set()
    offsets = {}
    for x, q, v, idx in s3_fixed_points():
        if x in S3_SPECIAL:
            cid = S3_SPECIAL[x]
            if cid in seen or q not in ("e",):
                continue
            seen.add(cid)
            offsets[cid] = v
            rows.append({"component": cid, "element": "e", "index": 1, "note": frac(x)})
            reid.append(rows[-1])
            continue
        rows.append({"component": "a7", "element": q, "index": idx, "note": frac(x)})
        reid.append({"component": "a7", "element": {"q": q, "v": [v]}, "index": idx, "note": frac(x)})
    phi = [{"source": cid, "target": "a7", "copies": [{"offset": [offsets[cid]]}]} for cid in ("a1", "a3", "a5")]
    return {
        "schema_version": 1,
        "metadata": {"name": "circle_s3_deg4", "space": "S^1 with S_3 acting by x.a = x + 1/3, x.b = 1 - x",
                     "map": "degree 4, piecewise linear"},
        "group": group,
        "components": comps,
        "map": maps,
        "fixed_points": rows,
        "reidemeister_fixed_points": reid,
        "phi": phi,
    }


def broken_fixtures():
    """Inputs for the exit-code paths: validation, cross-check, parse and schema failures."""
    errs = OUT / "errors"
    errs.mkdir(parents=True, exist_ok=True)
    doc = s2_z2(False)
    doc["metadata"]["name"] = "bad_boundary"
    doc["components"][1]["boundaries"][1]["matrix"][0][0] = fin(("e", 1))
    (errs / "bad_boundary.json").write_text(json.dumps(doc, indent=2) + "\n")
    doc = circle_z2(3)
    doc["metadata"]["name"] = "bad_table"
    doc["fixed_points"][0]["index"] = 1
    (errs / "bad_table.json").write_text(json.dumps(doc, indent=2) + "\n")
    text = json.dumps(circle_z2(3), indent=2)
    (errs / "truncated.json").write_text(text[: len(text) // 2])
    doc = circle_z2(3)
    doc["components"][0]["colour"] = "red"
    (errs / "unknown_field.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    write("circle_z2_deg3", circle_z2(3))
    write("circle_z2_deg5", circle_z2(5))
    write("s2_z2_map1", s2_z2(False))
    write("s2_z2_map2", s2_z2(True))
    write("s2_z3", s2_z3())
    write("torus_z2", torus_z2())
    write("circle_s3_deg4", circle_s3())
    broken_fixtures()
