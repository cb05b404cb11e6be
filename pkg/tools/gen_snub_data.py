"""Regenerate src/zigzag/data/snub_*.hasse.

The snub is the alternation of the omnitruncation: its vertices are the
flags of one orientation class of the base solid.  Each face of the base
gives a polygon, each vertex gives a polygon, and each flag of the other
class gives a triangle on its three sigma-neighbours.
"""
import sys
from pathlib import Path

import numpy as np

from zigzag import constructors
from zigzag._kernels import bfs_parity
from zigzag.complex import Complex, require_valid, write_hasse
from zigzag.flags import FlagIndex


def snub(K: Complex) -> Complex:
    fi = FlagIndex(K)
    s1, s2, s3 = fi.sigma
    parity, ok = bfs_parity(fi.sigma, 0)
    if not ok:
        raise ValueError("base solid must be orientable")
    even = np.nonzero(parity == 0)[0]
    vid = {int(f): i for i, f in enumerate(even)}
    polys = []
    for step in (lambda x: s1[s2[x]], lambda x: s2[s3[x]]):
        seen = set()
        for f in even.tolist():
            if f in seen:
                continue
            cyc, x = [], f
            while x not in seen:
                seen.add(x)
                cyc.append(vid[x])
                x = int(step(x))
            polys.append(cyc)
    for g in np.nonzero(parity == 1)[0].tolist():
        polys.append([vid[int(s1[g])], vid[int(s2[g])], vid[int(s3[g])]])
    return require_valid(Complex.from_polygons(polys), "snub")


def main(out_dir: str) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, base in (("snub_cube", constructors.cube(3)), ("snub_dodecahedron", constructors.dodecahedron())):
        S = snub(base)
        with open(out / f"{name}.hasse", "w") as fh:
            fh.write(f"# {name}: f-vector {S.counts}\n")
            write_hasse(S, fh)
        print(name, S.counts)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/zigzag/data")
