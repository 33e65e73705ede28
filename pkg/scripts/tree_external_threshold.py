#!/usr/bin/env python3
"""Compare leaves-minus-external-branches against exact dim for two external-branch thresholds.

A branch is counted external when its terminal degree is at least the threshold.
"""
import argparse

from dimdist.corpus import trees
from dimdist.graph import is_path_graph
from dimdist.graph6 import encode
from dimdist.resolving import metric_dimension, tree_features

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--max-n", type=int, default=10)
args = ap.parse_args()

print(" n  trees  bad(>=1)  bad(>=2)  first bad(>=2)")
for n in range(4, args.max_n + 1):
    bad = {1: 0, 2: 0}
    first = ""
    examined = 0
    for t in trees(n):
        if is_path_graph(t):
            continue
        examined += 1
        f = tree_features(t)
        k = metric_dimension(t).k
        for th in bad:
            guess = f.num_leaves - sum(v >= th for v in f.terminal_degree.values())
            if guess != k:
                bad[th] += 1
                if th == 2 and not first:
                    first = encode(t)
    print(f"{n:2d}  {examined:5d}  {bad[1]:8d}  {bad[2]:8d}  {first}")
