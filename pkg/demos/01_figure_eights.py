"""Two ways to pair the darts of a single vertex with two loops.

Pairing each loop with itself cannot be drawn with alternating pairs; pairing
the loops across gives the ordinary figure-eight curve.
"""

from xplanar import decide, parse_xgraph
from xplanar.core import verify_forbidden_pair

LOOP = """\
xgraph 1 2
e 0 0 0
e 1 0 0
p 0 0.s 0.t | 1.s 1.t
"""

PASS = """\
xgraph 1 2
e 0 0 0
e 1 0 0
p 0 0.t 1.s | 0.s 1.t
"""

for name, text in [("loops paired with themselves", LOOP), ("loops paired across", PASS)]:
    g = parse_xgraph(text)
    verdict = decide(g)
    print(f"== {name}")
    print(verdict.format(), end="")
    if not verdict.planar:
        c = verdict.certificate()
        report = verify_forbidden_pair(c.walk1, c.walk2, g)
        print(f"checker: valid={report.valid} crossing={sorted(report.crossing)}")
    print()
