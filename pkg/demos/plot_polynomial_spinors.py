"""
Jacobsthal polynomial spinors
=============================

Replacing 2 by 2x in the recurrence gives polynomial spinors HSJ_n(x).
Their closed form lives in Q(x)[c] with c^2 = 8x+1; after dividing by c
everything collapses back to polynomials.
"""

from fractions import Fraction

from jspinor import (
    SeqKind, jacobsthal_poly, poly_gen_series, spinor_poly_binet,
    spinor_poly_term, spinor_term,
)
from jspinor.sequences import spinor_poly_binet_ext

for n in range(6):
    print(f"J_{n}(x) =", jacobsthal_poly(n))

print()
for n in range(4):
    print(f"HSJ_{n}(x) =", spinor_poly_term(n))

###############################################################################
# At x = 1 the integer sequence comes back; other rationals work too

s = spinor_poly_term(5)
print("x=1  :", s.map(lambda p: p(1)), "==", spinor_term(SeqKind.HSJ, 5))
print("x=1/2:", s.map(lambda p: p(Fraction(1, 2))))

###############################################################################
# The closed form, first in the extension ring and then reduced

print(spinor_poly_binet_ext(3))
print(spinor_poly_binet(3) == spinor_poly_term(3))

# Bivariate generating function expanded in t
for n, coeff in enumerate(poly_gen_series(3).coeffs):
    print(f"t^{n}:", coeff)
