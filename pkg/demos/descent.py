"""
Walking a b-coloring down to chi
================================

certify_continuity starts at b(G) and removes one color at a time with
local recolorings, falling back to irises or the exact oracle.
"""

from bcontinuity import certify_continuity, random_tree, to_graph6
from bcontinuity.generators import hypercube

tree = random_tree(12, seed=3)
trace = certify_continuity(tree)
print(to_graph6(tree), trace.verdict.value, trace.achieved)
for step in trace.steps:
    print(" ", step.move.tag, step.before_k, "->", step.after_k, step.coloring.to_text())

# on the cube the walk stops: no 3-b-coloring exists and the oracle says so
trace = certify_continuity(hypercube(3))
print("cube:", trace.verdict.value, "stopped at", trace.stopped_at, "absent:", trace.oracle_confirmed_absent)
