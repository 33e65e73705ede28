#!/usr/bin/env python3
"""List graphs with D = n-2 that carry no D=n-2 family label, with their invariants."""
import argparse

from dimdist.classify import classify_D_extremal, d_stratum
from dimdist.corpus import CorpusSpec, enumerate_corpus
from dimdist.distinguishing import distinguishing_number
from dimdist.graph6 import encode
from dimdist.twin import twin_graph

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--max-n", type=int, default=7)
args = ap.parse_args()

for n in range(4, args.max_n + 1):
    for g in enumerate_corpus(CorpusSpec(n)):
        res = distinguishing_number(g)
        if res.k != n - 2:
            continue
        if any(d_stratum(m.label) == "D-n2" for m in classify_D_extremal(g)):
            continue
        tg = twin_graph(g)
        print(f"{encode(g):8} n={n} D={res.k} edges={g.edges()} "
              f"twin sizes={tg.sizes} types={''.join(tg.types)} witness={res.witness.colors}")
