"""
Screening a graph6 stream
=========================

The same pipeline as ``bcontinuity screen``: parse each line, filter, and
flag anything whose spectrum is not an interval.
"""

import io
import json

from bcontinuity import cli, to_graph6
from bcontinuity.generators import crown, cycle, hypercube, random_tree

lines = [to_graph6(g) for g in (cycle(6), crown(4), hypercube(3), random_tree(9, seed=1))]
out = io.StringIO()
code = cli.run(["screen", "--format", "json", "--bipartite"], stdin=io.StringIO("\n".join(lines)), stdout=out)
summary = json.loads(out.getvalue())["summary"]
print("exit", code)
print(json.dumps(summary, indent=2))
