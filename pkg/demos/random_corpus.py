"""
Tallying verdicts over random graphs
====================================
"""

from collections import Counter

from graphstab import (is_stable, is_stable_via_T, left_infinite_criterion, sources,
                       stabilize_minimal)
from graphstab.generate import corpus

graphs = corpus(seed=1, size=300)
tally = Counter(is_stable(g).verdict for g in graphs)
print(tally)

agree = sum(is_stable(g).verdict == is_stable_via_T(g).verdict for g in graphs)
print(f"{agree}/{len(graphs)} agree across the two trace tests")

free = [g for g in graphs if not sources(g)]
print(len(free), "source-free;",
      sum(left_infinite_criterion(g).all_left_infinite for g in free), "of them all left infinite")

# adding heads at the left-finite vertices always suffices
print(all(is_stable(stabilize_minimal(g)).stable for g in graphs))
