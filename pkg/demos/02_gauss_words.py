"""Gauss words in, verdicts and a drawing out.

"a b c a b c" is the shadow of the standard trefoil diagram and embeds.
"a b a b" cannot be drawn in the plane with alternating pairs.
"""

import sys
from pathlib import Path

from xplanar import decide
from xplanar.core import from_gauss_code, serialize_xgraph
from xplanar.embed import render_schematic

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")

for word in ["a b c a b c", "a b a b", "a b c a d c b d"]:
    g = from_gauss_code(word)
    verdict = decide(g)
    print(f"== {word}")
    print(serialize_xgraph(g), end="")
    print(verdict.format())
    if verdict.planar:
        name = out_dir / ("curve_" + word.replace(" ", "") + ".svg")
        name.write_text(render_schematic(g, verdict.rotation(), verdict.parts[0].faces))
        print(f"wrote {name}\n")
