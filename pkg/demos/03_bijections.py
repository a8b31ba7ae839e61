"""A guided walk through the constructive maps.

Dyck paths of length 2n+2 split by their first three steps.  The two
easy classes contract onto the next family down; the up-up-up class
splits again by whether the path revisits level one before its rightmost
maximum, and each half embeds into the smaller family through its own
injection.  What the two injections jointly miss is counted by T(2,n),
and those survivors map to ordered pairs of Dyck paths whose heights
differ by at most one.
"""

from supercat import (
    StartClass,
    classify_start,
    enum_dyck,
    from_pair,
    g_intermediate,
    injection_f,
    injection_f_inverse,
    injection_g,
    injection_g_inverse,
    markers,
    parse_path,
    start_class_sizes,
    super_catalan_t,
    theorem4_census,
    to_pair,
    to_pair_all,
)

print("Start classes of Dyck paths of length 10:")
sizes = start_class_sizes(5)
for cls in (StartClass.A, StartClass.B, StartClass.NSTAR, StartClass.NSTARSTAR):
    print(f"  {cls.name:<10} {sizes[cls]:>3}   ({cls.value})")

print()
pi = parse_path("UUUDDDUD", "dyck")
print(f"First injection on {pi.steps} (class {classify_start(pi).name}):")
rho = injection_f(pi)
print(f"  image  {rho.steps}")
print(f"  back   {injection_f_inverse(rho).steps}")

print()
pi = parse_path("UUUDDUUDDD", "dyck")
print(f"Two-stage injection on {pi.steps} (class {classify_start(pi).name}):")
stage1 = g_intermediate(pi)
print(f"  stage 1 (ends at level 2): {stage1.steps}")
sigma = injection_g(pi)
mk = markers(sigma)
print(f"  image  {sigma.steps}   split maxima: {mk.h_minus} before, {mk.h_plus} after")
print(f"  back   {injection_g_inverse(sigma).steps}")

print()
n = 4
print(f"Survivors for n = {n}: bounded-gap census {theorem4_census(n)} = T(2,{n}) = "
      f"{super_catalan_t(2, n)}")
for path in enum_dyck(n):
    mk = markers(path)
    if mk.h_plus > mk.h_minus + 2:
        continue
    if mk.height == 1:
        pairs = to_pair_all(path)
        shown = " and ".join(f"({p.first.steps or 'empty'}, {p.second.steps or 'empty'})" for p in pairs)
        print(f"  {path.steps}  (height one, counted twice) -> {shown}")
    else:
        pair = to_pair(path)
        back = from_pair(pair)
        print(f"  {path.steps} -> ({pair.first.steps}, {pair.second.steps}) -> {back.steps}")
