"""The level decomposition v(Delta) = v(Delta_min) + 12 kappa + 12 level.

The Jacobian's minimal discriminant comes from a full local minimal-model
computation (all residue characteristics); kappa measures the denominator
depth of the marked point on that minimal model.
"""

from g1min import (
    LocalContext, Point, WeierstrassCurve, construct_22, kappa, level,
    minimal_discriminant_valuation, point_mul, scalar_multiply,
)

ctx = LocalContext(2)
F = construct_22(0, 0, 0, 1)
print("level report of the level-zero form:", level(F, ctx))
print("after scaling the form by 2:", level(scalar_multiply(F, 2), ctx))

E = WeierstrassCurve(0, 0, 1, -1, 0)
print("\ncurve y^2 + y = x^3 - x: Delta =", E.disc)
v, cmap = minimal_discriminant_valuation(E, ctx)
print("minimal discriminant valuation at 2:", v)

Q = point_mul(E, 5, Point(0, 0))
print("5 * (0,0) =", (Q.x, Q.y))
print("kappa at 2:", kappa(Q, E, ctx))
