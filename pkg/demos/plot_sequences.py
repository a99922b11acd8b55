"""
Hyperbolic Jacobsthal spinor sequences
======================================

Builds the Jacobsthal numbers, packs four consecutive ones into a split
quaternion, and maps the result to a spinor.  The Binet closed form is then
compared against the recurrence.
"""

from jspinor import (
    SeqKind, binet_constants, jacobsthal, jacobsthal_lucas, spinor_binet,
    spinor_term, split_quat_seq,
)

print("J :", [jacobsthal(n) for n in range(10)])
print("jL:", [jacobsthal_lucas(n) for n in range(10)])

###############################################################################
# SJQ_n = J_n + J_{n+1} i + J_{n+2} j + J_{n+3} k, and its spinor image

for n in range(5):
    print(n, split_quat_seq(SeqKind.HSJ, n), spinor_term(SeqKind.HSJ, n))

###############################################################################
# Binet constants, solved from the two seeds.  The closed form is
# (2^n A - (-1)^n B) / 3 for HSJ and 2^n A + (-1)^n B for HSJL.

for kind in SeqKind:
    k = binet_constants(kind)
    print(kind.name, "A =", k.A, " B =", k.B)

ok = all(spinor_binet(kind, n) == spinor_term(kind, n) for kind in SeqKind for n in range(100))
print("closed form agrees for n < 100:", ok)

# With the published A = [1+8u; 4u] the second component goes wrong at once
print("published form at n=0:", spinor_binet(SeqKind.HSJ, 0, use_printed=True),
      " actual:", spinor_term(SeqKind.HSJ, 0))
