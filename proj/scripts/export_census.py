#!/usr/bin/env python3
"""Export census triangulations from SnapPy into the pglsym JSON format.

Usage: export_census.py OUTDIR NAME [NAME ...]

Peripheral curves are rebuilt from the SnapPea crossing counts: each cusp
triangle's entering and leaving sides are paired into segments, loops are
spliced into a single closed walk, and the result is written under "curves"
as [tet, vertex, enter_face, exit_face] lists, one list per cusp holding
the meridian and then the longitude.
"""
import json
import sys
from collections import defaultdict

import snappy


def parse_snappea(text):
    lines = [l for l in text.splitlines() if l.strip() and not l.startswith("%")]
    pos = 0
    name = lines[pos].strip(); pos += 1
    pos += 3  # solution type, orientability, Chern-Simons
    cusps_line = lines[pos].split(); pos += 1
    cusp_count = int(cusps_line[0]) + int(cusps_line[1])
    pos += cusp_count
    t = int(lines[pos]); pos += 1
    tets = []
    for _ in range(t):
        nbrs = [int(x) for x in lines[pos].split()]; pos += 1
        perms = [[int(c) for c in p] for p in lines[pos].split()]; pos += 1
        cusp_of_vertex = [int(x) for x in lines[pos].split()]; pos += 1
        curves = []
        for _ in range(4):
            curves.append([int(x) for x in lines[pos].split()]); pos += 1
        pos += 1  # shape
        tets.append({"nbrs": nbrs, "perms": perms, "cusps": cusp_of_vertex, "curves": curves})
    return name, tets


def follow(tets, segs):
    """Split the segment set into closed loops."""
    by_entry = defaultdict(list)
    for k, (tet, v, a, b) in enumerate(segs):
        by_entry[(tet, v, a)].append(k)
    used = [False] * len(segs)
    loops = []
    for start in range(len(segs)):
        if used[start]:
            continue
        loop, k = [], start
        while not used[k]:
            used[k] = True
            loop.append(k)
            tet, v, a, b = segs[k]
            g = tets[tet]
            key = (g["nbrs"][b], g["perms"][b][v], g["perms"][b][b])
            nxt = [x for x in by_entry[key] if not used[x]]
            if not nxt:
                break
            k = nxt[0]
        loops.append(loop)
    return loops


def rebuild_curve(tets, row, cusp):
    segs = []
    for tet, g in enumerate(tets):
        for v in range(4):
            if g["cusps"][v] != cusp:
                continue
            counts = g["curves"][row][4 * v:4 * v + 4]
            ins = [f for f in range(4) for _ in range(max(counts[f], 0))]
            outs = [f for f in range(4) for _ in range(max(-counts[f], 0))]
            if len(ins) != len(outs):
                raise ValueError("unbalanced crossing counts")
            segs += [[tet, v, a, b] for a, b in zip(ins, outs)]
    if not segs:
        return None
    for _ in range(len(segs)):
        loops = follow(tets, segs)
        if len(loops) == 1:
            return [segs[k] for k in loops[0]]
        owner = {k: i for i, loop in enumerate(loops) for k in loop}
        spliced = False
        for x in range(len(segs)):
            for y in range(x + 1, len(segs)):
                if owner[x] != owner[y] and segs[x][:2] == segs[y][:2]:
                    segs[x][3], segs[y][3] = segs[y][3], segs[x][3]
                    spliced = True
                    break
            if spliced:
                break
        if not spliced:
            return None
    return None


def export(name):
    M = snappy.Manifold(name)
    _, tets = parse_snappea(M._to_string())
    # cusps in order of their first cusp triangle
    order = []
    for g in tets:
        for c in g["cusps"]:
            if c not in order:
                order.append(c)
    curves = []
    for c in order:
        mer = rebuild_curve(tets, 0, c)
        lon = rebuild_curve(tets, 2, c)
        if mer is None or lon is None:
            curves = None
            break
        curves.append([mer, lon])
    doc = {
        "name": name,
        "source": f"SnapPy {snappy.__version__} census manifold {name}; "
                  f"H1 = {M.homology()}, cusps = {M.num_cusps()}",
        "tetrahedra": len(tets),
        "gluings": [[[g["nbrs"][f], g["perms"][f]] for f in range(4)] for g in tets],
    }
    if curves is not None:
        doc["curves"] = curves
    return doc


def main():
    if len(sys.argv) < 3:
        print(__doc__, file=sys.stderr)
        return 2
    out = sys.argv[1]
    for name in sys.argv[2:]:
        doc = export(name)
        with open(f"{out}/{name}.json", "w") as fh:
            fh.write(dump(doc))
        print(name, "curves" if "curves" in doc else "no curves")
    return 0


def dump(doc):
    # one tetrahedron / one curve per line
    def row(x):
        return json.dumps(x, separators=(", ", ": "))
    parts = ["{"]
    parts.append(f'  "name": {row(doc["name"])},')
    parts.append(f'  "source": {row(doc["source"])},')
    parts.append(f'  "tetrahedra": {doc["tetrahedra"]},')
    gl = ",\n".join("    " + row(g) for g in doc["gluings"])
    tail = "," if "curves" in doc else ""
    parts.append(f'  "gluings": [\n{gl}\n  ]{tail}')
    if "curves" in doc:
        comps = []
        for comp in doc["curves"]:
            comps.append("    [\n" + ",\n".join("      " + row(c) for c in comp) + "\n    ]")
        parts.append('  "curves": [\n' + ",\n".join(comps) + "\n  ]")
    parts.append("}")
    return "\n".join(parts) + "\n"


if __name__ == "__main__":
    sys.exit(main())
