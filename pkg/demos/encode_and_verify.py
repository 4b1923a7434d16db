"""
Encoding a cograph with a few vertex orders
===========================================

Build a cotree, turn it into a closed line-model and read neighbourhoods
back out of the intervals.
"""

from cographlin import cotree_to_graph, encode, factorial_rank, parse_cotree
from cographlin.models import format_line_model, query_closed_neighborhood, verify_line_model

# a parallel node over a series node of three non-edges, plus one isolated vertex
t = parse_cotree("P(S(P(0,1),P(2,3),P(4,5)),6)")
g = cotree_to_graph(t)
print("vertices:", g.n, "edges:", g.m)

# the rank annotation decides how many orders the encoder may use
ann = factorial_rank(t)
print("root rank:", ann.root_rank, "minimal:", ann.minimal[t.root])

m = encode(t, ann)
print(format_line_model(m))

# every vertex's intervals should cover exactly its closed neighbourhood
print("verify:", verify_line_model(g, m))

for x in range(g.n):
    print(x, sorted(query_closed_neighborhood(m, x)), sorted(g.closed_neighborhood(x)))
