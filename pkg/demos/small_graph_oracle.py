"""
Exact linearity and contiguity of small graphs
==============================================

Exhaustive search over vertex orders gives the optimum on a handful of
vertices, which is enough to sanity-check the encoder.
"""

from cographlin import Graph, build_cotree, encode
from cographlin.models import format_line_model
from cographlin.oracle import bruteforce_contiguity, bruteforce_linearity

c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])

for name, g in [("C4", c4), ("claw", claw)]:
    lin = bruteforce_linearity(g)
    cont = bruteforce_contiguity(g)
    print(name, "lin =", lin.value, "cont =", cont.value)

# the optimal witness for C4 next to what the encoder produces
print(format_line_model(bruteforce_linearity(c4).witness))
print(format_line_model(encode(build_cotree(c4))))
