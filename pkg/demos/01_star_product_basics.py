"""A first tour of the exact n-ary star product.

The product takes n polynomial factors at once.  At theta = 0 it is the
plain pointwise product; switching the deformation on adds lower-degree
correction terms with exact rational-complex coefficients.

Run:  python demos/01_star_product_basics.py
"""

from fractions import Fraction

from nstar import (
    ThetaConfig,
    conjugate_star_n,
    star_bracket,
    star_n,
    star_n_stepwise,
    x,
)

cfg = ThetaConfig(3, (Fraction(1), Fraction(1), Fraction(1)))
print("configuration: n = 3, theta =", [str(t) for t in cfg.theta])

print("\n-- coordinates ---------------------------------------------------")
r = star_n([x(1, 3), x(2, 3), x(3, 3)], cfg)
print("star(x1, x2, x3) =", r)
print("star(x3, x2, x1) =", star_n([x(3, 3), x(2, 3), x(1, 3)], cfg))
print("ordering matters: the product is noncommutative in the outer slots.")

print("\n-- theta = 0 degeneracy ------------------------------------------")
flat = ThetaConfig(3, (Fraction(0),) * 3)
f = x(1, 3) ** 2 + x(2, 3)
g = x(3, 3) - 2
h = x(1, 3) * x(3, 3)
assert star_n([f, g, h], flat) == f * g * h
print("star(f, g, h) at theta = 0 equals the pointwise product f*g*h.")

print("\n-- the bracket ---------------------------------------------------")
b = star_bracket(x(1, 3), x(3, 3), x(2, 3), cfg)
print("bracket of x1 and x3 with middle x2:", b)
assert star_bracket(x(1, 3), x(1, 3), x(2, 3), cfg).is_zero()
print("bracketing a factor with itself gives 0 (antisymmetry).")

print("\n-- conjugation ---------------------------------------------------")
c = conjugate_star_n([x(1, 3), x(2, 3), x(3, 3)], cfg)
print("conjugate product of (x1, x2, x3):", c)
assert c == star_n([x(1, 3), x(2, 3), x(3, 3)], cfg.negate())
print("conjugation is exactly the theta -> -theta product.")

print("\n-- two independent engines ---------------------------------------")
fast = star_n([f, g, h], cfg)
naive = star_n_stepwise([f, g, h], cfg)
assert fast == naive
print("multinomial expansion and the term-by-term operator oracle agree:")
print("  ", fast)

print("\n-- higher dimension ----------------------------------------------")
cfg4 = ThetaConfig(4, (Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
r4 = star_n([x(1, 4), x(2, 4), x(3, 4), x(4, 4)], cfg4)
print("n = 4: star(x1, x2, x3, x4) =", r4)
