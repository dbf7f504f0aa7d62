# Rational preperiodic points of x^d + c
#
# Every rational preperiodic point of x^d + c lies in |x| <= max(2, 2|c|) and
# has reduced denominator b with b^d = den(c).  That turns the search into a
# finite graph computation.
from fractions import Fraction

from preperiodic import denominator_filter, find_portrait, is_preperiodic

# x^2 - 2: the classic portrait with two fixed points and a tail through 0
p = find_portrait(2, -2)
for x in p.points:
    print(f"{str(x):>5} -> {str(p.edges[x]):>5}   tail={p.tail[x]} cycle={p.cycle[x]}")

# x^2 - 1 has the 2-cycle 0 <-> -1
print(find_portrait(2, -1).to_json())

# Non-integral c: denominators of preperiodic points are forced
print(find_portrait(2, Fraction(1, 4)).points)        # [-1/2, 1/2]
print(find_portrait(2, Fraction(-21, 16)).points)

# When den(c) is not a d-th power nothing can be preperiodic
dec = denominator_filter(2, Fraction(1, 12))
print(dec)                                            # fails, witness prime 3
print(len(find_portrait(2, Fraction(1, 12))))         # 0

# Orbit traces explain each verdict
print(is_preperiodic(2, -1, 1))
print(is_preperiodic(2, Fraction(3, 25), Fraction(1, 5)))
