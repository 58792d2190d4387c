"""
Lower bounds over all small trees
=================================

Runs every free tree up to 10 vertices through the energy bounds and
reports the tightest margin for each vertex count.
"""
from seidel_lab import check_tree, enumerate_free_trees

print(" n  trees  min(E - tree bound)  min(E - Haemers)")
for n in range(2, 11):
    reports = [check_tree(T) for T in enumerate_free_trees(n)]
    assert all(r.passed for r in reports)
    tight = min(r.slack_tree for r in reports)
    haem = min(r.slack_haemers for r in reports)
    print(f"{n:2d}  {len(reports):5d}  {tight:19.6f}  {haem:16.6f}")
