"""
Factorial rank of rooted trees
==============================

The rank is the height of the largest double factorial tree that can be
obtained by contracting edges.  The dynamic program is compared with the
brute-force minor search on a few trees.
"""

from cographlin import factorial_rank, gen_binary_cotree, gen_double_factorial
from cographlin.rank import RootedTree, contains_double_factorial_minor, oracle_rank

# double factorial trees have rank equal to their height
for h in range(5):
    t = gen_double_factorial(h)
    print("F^%d: %d leaves, rank %d" % (h, t.n, factorial_rank(t).root_rank))

# complete binary trees grow their rank slowly
print([factorial_rank(gen_binary_cotree(h)).root_rank for h in range(1, 13)])

# the brute-force search agrees on small trees
star = RootedTree.star(5)
path = RootedTree.path(5)
print("star:", factorial_rank(star).root_rank, oracle_rank(star))
print("path:", factorial_rank(path).root_rank, oracle_rank(path))
print("path has F^1 minor:", contains_double_factorial_minor(path, 1))
