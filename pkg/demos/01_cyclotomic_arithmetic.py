"""Exact cyclotomic arithmetic and Gaussian binomials.

Every scalar in hopfforge is an element of Q(zeta_L) in the power basis,
reduced modulo the L-th cyclotomic polynomial; nothing is ever rounded.
"""

from hopfforge import CycScalar, multiplicative_order, primitive_root, q_binomial, q_factorial

one = CycScalar.from_rational(1)
z6 = primitive_root(6)
print("zeta_6          =", z6)
print("zeta_6^2        =", z6 ** 2, "  (the reduction z^2 = z - 1)")
print("zeta_6^3        =", z6 ** 3)
print("1/zeta_6        =", z6.inverse(), "  (= zeta_6^5)")
print("order(zeta_6)   =", multiplicative_order(z6))
print("order(2)        =", multiplicative_order(CycScalar.from_rational(2)))

# elements at different conductors promote automatically
z3, z4 = primitive_root(3), primitive_root(4)
prod = z3 * z4
print("\nzeta_3 * zeta_4 lives at conductor", prod.L, "->", prod)

# Gaussian binomials are evaluated after symbolic cancellation, so root-of-
# unity specializations never hit 0/0
q = z6
print("\nGaussian binomials at q = zeta_6:")
for n in range(7):
    row = [str(q_binomial(n, k, q)) for k in range(n + 1)]
    print(f"  n={n}:", row)
print("row n = 6 vanishes in the middle exactly because order(q) = 6")
print("(4 choose 3)_q =", q_binomial(4, 3, q), " and (3)_q! =", q_factorial(3, q))
