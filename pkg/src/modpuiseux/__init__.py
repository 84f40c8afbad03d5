"""Modular Newton-Puiseux expansions, polygon trees, good primes and genus.

The main entry points are re-exported here; see the submodules for the
full interfaces.
"""

from .bpoly import BiPoly, discriminant_y, reduce_mod_p
from .errors import InputError, InternalError, PuiseuxError
from .fields import QQ, ZZ, FqContext, FqElement, fq_make, prime_field
from .genus import GenusReport, genus_mod_p, genus_over_q
from .parsing import parse_bipoly
from .polygon import PolygonTree, characteristic_poly, newton_polygon, polygon_tree, tree_equal
from .puiseux import PlaceSet, RationalPuiseuxExpansion, places_above, rnpuiseux, singular_part, verify_expansion
from .reduction import PrimeVerdict, Reason, Status, choose_prime, screen_prime, verify_prime
from .upoly import UniPoly, factor_fq

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "UniPoly", "QQ", "ZZ", "FqContext", "FqElement", "fq_make", "prime_field",
    "parse_bipoly", "reduce_mod_p", "discriminant_y", "factor_fq",
    "newton_polygon", "characteristic_poly", "polygon_tree", "tree_equal", "PolygonTree",
    "rnpuiseux", "singular_part", "places_above", "verify_expansion",
    "RationalPuiseuxExpansion", "PlaceSet",
    "screen_prime", "verify_prime", "choose_prime", "PrimeVerdict", "Status", "Reason",
    "genus_mod_p", "genus_over_q", "GenusReport",
    "PuiseuxError", "InputError", "InternalError",
]
