"""Walk through the scheme layer: notation, parsing, and the 53-count.

A degree-9 M-curve has 28 ovals; with three nests the 25 empty ovals
split as alpha_1 + alpha_2 + alpha_3 interior plus beta outside.  The
bracket notation writes this as <J + 1<a1> + 1<a2> + 1<a3> + b>.
"""

from nestprohibitor import (
    enumerate_nest_schemes,
    enumerate_three_nest_schemes,
    format_real_scheme,
    parse_real_scheme,
)

text = "<J + 1<2> + 1<2> + 1<20> + 1>"
scheme = parse_real_scheme(text)
print(f"parsed {text}")
print(f"  alpha = {scheme.alpha}, beta = {scheme.beta}, all even: {scheme.all_even}")
print(f"  canonical text: {format_real_scheme(scheme)}")
print()

even = enumerate_three_nest_schemes(lambda s: s.all_even)
beta1 = [s for s in even if s.beta == 1]
print(f"all-even schemes: {len(even)}  (the excluded family)")
print(f"  with beta = 1:  {len(beta1)}  (previously known)")
print(f"  the rest:       {len(even) - len(beta1)}  (new)")
print()

print("smallest members of the family:")
for s in even[:5]:
    print(f"  {s}")
print()

print("complex schemes of a single nest with 2 interior ovals:")
for ns in enumerate_nest_schemes(2, jump_allowed=True):
    print(f"  {ns}   (a+={ns.a_plus}, a-={ns.a_minus})")
