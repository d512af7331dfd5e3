"""Regenerate src/weldkit/data/rolfsen.json.

3_1, 5_1 come from the (2, q) torus family and 4_1, 5_2, 6_1 from the twist
family. 6_2 and 6_3 are closed 3-braid diagrams of their standard braid
words; both are alternating and minimal. Every code is checked to be a
planar diagram before its fingerprint is written.

    python3 tools/gen_catalog.py [--check]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from weldkit.families import (
    CatalogEntry,
    bundled_catalog_path,
    catalog_dump,
    fingerprint,
    torus_2q,
    twist,
)
from weldkit.gaussdiag import OVER, UNDER, Pass, WeldedDiagram, supporting_genus

BRAIDS = {
    "6_2": (3, [1, 1, 1, -2, 1, -2]),
    "6_3": (3, [1, 1, -2, 1, -2, -2]),
}

UNKNOTTING = {"3_1": 1, "4_1": 1, "5_1": 2, "5_2": 1, "6_1": 1, "6_2": 1, "6_3": 1}


def closed_braid(strands: int, word) -> WeldedDiagram:
    """Gauss code of the closure of a braid word (letter i = sigma_i, -i its
    inverse; in sigma_i the strand coming from position i passes over)."""
    code, signs = [], {}
    pos = 0
    for _ in range(strands):
        for k, g in enumerate(word, start=1):
            i = abs(g) - 1
            e = 1 if g > 0 else -1
            if pos == i:
                code.append(Pass(k, OVER if e > 0 else UNDER))
                pos = i + 1
            elif pos == i + 1:
                code.append(Pass(k, UNDER if e > 0 else OVER))
                pos = i
            signs[k] = e
        if pos == 0:
            break
    if len(code) != 2 * len(word):
        raise ValueError("braid closure is not a knot")
    return WeldedDiagram(tuple(code), signs)


def build():
    diagrams = {
        "3_1": torus_2q(1),
        "4_1": twist(2),
        "5_1": torus_2q(2),
        "5_2": twist(3),
        "6_1": twist(4),
    }
    for name, (s, word) in BRAIDS.items():
        diagrams[name] = closed_braid(s, word)
    entries = []
    for name, d in diagrams.items():
        if supporting_genus(d) != 0:
            raise SystemExit(f"{name}: code is not planar")
        entries.append(CatalogEntry(name, d, UNKNOTTING[name], fingerprint(d)))
    return entries


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--check", action="store_true", help="compare with the bundled file instead of writing"
    )
    args = ap.parse_args(argv)
    text = catalog_dump(build())
    path = Path(bundled_catalog_path())
    if args.check:
        same = path.read_text() == text
        print("up to date" if same else "stale")
        return 0 if same else 1
    path.write_text(text)
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
