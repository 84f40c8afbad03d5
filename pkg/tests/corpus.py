"""Shared curve corpus with hand-derived genera."""

from modpuiseux.bench import dense

# (name, polynomial over Q, geometric genus)
#   y^2 = s(x), s squarefree of degree n: g = floor((n - 1) / 2)
#   y^m = s(x), s squarefree of degree n: g = ((m - 1)(n - 1) - gcd(m, n) + 1) / 2
#   smooth plane curve of degree d: g = (d - 1)(d - 2) / 2
CURVES = [
    ("cusp", "y^2 - x^3", 0),
    ("node", "y^2 - x^2 - x^3", 0),
    # x = s^2 and w = y / s^3 give w^2 = 1 + s: rational
    ("ramphoid", "(y^2 - x^3)^2 - x^7", 0),
    # y^2 = x^4 (1 + x): w = y / x^2 gives a conic
    ("tacnode", "(y - x^2)*(y + x^2) - x^5", 0),
    ("hyper3", "y^2 - x^3 - x - 1", 1),
    ("hyper5", "y^2 - x^5 + 1", 2),
    ("hyper6", "y^2 - x^6 - x - 1", 2),
    ("hyper9", "y^2 - x^9 + x + 1", 4),
    ("graph9", "y - x^9", 0),
    ("line", "y - x - x^2", 0),
    ("elliptic", "y^2 - x^3 + x", 1),
    # y^3 = x^4 + 1: total ramification over the 4 roots, one place at infinity (gcd(3,4) = 1)
    ("trigonal", "y^3 - x^4 - 1", 3),
    # Fermat quartic: smooth of degree 4
    ("fermat4", "y^4 + x^4 + 1", 3),
    # y^2 = x^2 (x^5 - 1): normalizes to the genus-2 curve w^2 = x^5 - 1
    ("nodal5", "y^2 - x^7 + x^2", 2),
]

DENSE = [("dense4", dense(4, 0)), ("dense5", dense(5, 0))]

# the genus table of the acceptance criteria
GENUS_TABLE = [
    ("y^2 - x^3", 0),
    ("y^2 - x^3 + x", 1),
    ("y^2 - x^5 + 1", 2),
    ("y^2 - x^9 + x + 1", 4),
    ("y - x^9", 0),
]
