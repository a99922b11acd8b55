"""
Split quaternions and their spinors
===================================

Basic arithmetic in the split quaternions, where i^2 = -1 but j^2 = k^2 = +1,
and the map that sends each one to a two-component hyperbolic spinor.
"""

from jspinor import SplitQuat, quat_to_spinor, sq_conj, sq_mul, sq_norm
from jspinor.splitquat import I, J, K

# The multiplication table is anticommutative off the diagonal
print("ij =", sq_mul(I, J), "  ji =", sq_mul(J, I))
print("jk =", sq_mul(J, K), "  kk =", sq_mul(K, K))

# Norm a^2 + b^2 - c^2 - d^2 is indefinite, so nonzero elements can have norm 0
p = SplitQuat.parse("1+j")
print("N(1+j) =", sq_norm(p), " and (1+j)(1-j) =", sq_mul(p, sq_conj(p)))

# The norm is multiplicative
q = SplitQuat.parse("2-i+3k")
print("N(pq) == N(p)N(q):", sq_norm(sq_mul(p, q)) == sq_norm(p) * sq_norm(q))

###############################################################################
# Each split quaternion a+bi+cj+dk becomes the spinor [a+du; -b+cu].
# Here u is the hyperbolic unit with u^2 = +1.

for x in (SplitQuat(1), I, J, K, q):
    print(f"{str(x):>8} -> {quat_to_spinor(x)}")
