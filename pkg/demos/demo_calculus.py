"""The orientation calculus behind the restrictions.

Each nest yields the terms (pi, pi', N, M) and the constants G and F; the
first formula's residuals E_0..E_3 control where exterior ovals may sit,
and the second formula requires F_i = G_j + G_k at every separating nest.
All reference tables regenerate from these operations.
"""

from nestprohibitor import NestScheme, ComplexType, e_values, f_value, g_value, nest_terms
from nestprohibitor.figures import build_figure, render_text

minus = NestScheme(-1, 1, 1)
plus = NestScheme(1, 1, 1)

print("per-nest terms for the balanced schemes:")
for s in (minus, plus):
    t = nest_terms(s)
    print(f"  {s}: pi={t.pi} pi'={t.pi_prime} N={t.big_n} M={t.big_m} G={g_value(s)}")
print()

print("first-formula residuals (exterior oval in T0..T3):")
for triple in [(minus, minus, minus), (minus, minus, plus)]:
    e = e_values(*triple)
    zones = [i for i in range(4) if e[i] == 0]
    print(f"  schemes {tuple(str(s) for s in triple)}: E = {e}, allowed zones {zones}")
print()

print("second-formula residuals for a down- and an up-tagged nest:")
for tag in ("d", "u"):
    sep = ComplexType(minus, tag)
    residual = f_value(sep) - g_value(minus) - g_value(minus)
    print(f"  {sep} with companions (-, -): F - G - G = {residual}")
print()

print(render_text(build_figure(19)))
print(render_text(build_figure(21)))
