"""Triangular fuzzy numbers: the vocabulary of the HOQ grids.

Relationship and correlation judgments enter the house of quality as
words; each word is a triangular fuzzy number (a, b, c) = (smallest,
most promising, largest value).  This walkthrough covers the triangle
shape, the componentwise algebra, and the crisp value that ranks TRs.
"""

import numpy as np

from fuzzyhoq import TFN, CorrelationDegree, RelationshipDegree

print("The linguistic scales")
print("=" * 60)
for degree in RelationshipDegree:
    print(f"  relationship {degree.name:<8} {degree.token or '(blank)':<8} -> {degree.tfn.as_tuple()}")
for degree in CorrelationDegree:
    print(f"  correlation  {degree.name:<8} {degree.token or '(blank)':<8} -> {degree.tfn.as_tuple()}")

print()
print("Membership is piecewise linear; a degenerate ramp is a step")
print("=" * 60)
strong = RelationshipDegree.STRONG.tfn  # (0.7, 1, 1): right ramp has zero width
for x in np.linspace(0.6, 1.0, 9):
    bar = "#" * int(round(40 * strong.membership(float(x))))
    print(f"  mu({x:4.2f}) = {strong.membership(float(x)):5.3f}  {bar}")

print()
print("Componentwise algebra")
print("=" * 60)
m, n = TFN(1, 2, 3), TFN(2, 3, 4)
print(f"  {m.as_tuple()} + {n.as_tuple()} = {(m + n).as_tuple()}")
medium = RelationshipDegree.MEDIUM.tfn
print(f"  Strong * Medium = {(strong * medium).as_tuple()}")
print(f"  0.5 * Strong    = {strong.scale(0.5).as_tuple()}")

print()
print("Division is NOT the inverse of multiplication: x / x widens")
print("=" * 60)
x = TFN(0.54, 0.8, 0.88)
q = x / x
print(f"  {x.as_tuple()} / itself = ({q.a:.4f}, {q.b:.4f}, {q.c:.4f})")
print("  the middle stays 1 but the spread reflects the uncertainty;")
print("  this is why normalized priorities can defuzzify above 1.")

print()
print("Crisp values: (a + 4b + c) / 6")
print("=" * 60)
for t in (strong, medium, q):
    print(f"  defuzzify{t.as_tuple()} = {t.defuzzify():.4f}")
