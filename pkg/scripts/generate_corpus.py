#!/usr/bin/env python3
"""Regenerate the packaged graph6 corpus of connected cubic simple graphs.

Writes src/nearnormal/data/cubicNN.g6 (one graph per line, full connected
corpus including bridged graphs; consumers filter).  Counts are checked
against the published sequence for connected cubic graphs before anything is
written, so a generator regression cannot silently corrupt the corpus.

Usage: python scripts/generate_corpus.py [orders...]
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

from nearnormal.corpus import CONNECTED_CUBIC_COUNTS, generate_connected_cubic
from nearnormal.graphio import write_graph6

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "nearnormal" / "data"


def main(argv: list[str]) -> int:
    orders = [int(a) for a in argv] or sorted(CONNECTED_CUBIC_COUNTS)
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for n in orders:
        start = time.time()
        graphs = generate_connected_cubic(n)
        elapsed = time.time() - start
        expected = CONNECTED_CUBIC_COUNTS.get(n)
        print(f"n={n}: {len(graphs)} graphs in {elapsed:.1f}s", flush=True)
        if expected is not None and len(graphs) != expected:
            print(f"  MISMATCH: expected {expected}; not writing", flush=True)
            return 1
        path = DATA_DIR / f"cubic{n:02d}.g6"
        path.write_text("".join(write_graph6(g) + "\n" for g in graphs))
        print(f"  wrote {path}", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
