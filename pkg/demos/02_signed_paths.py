"""The signed path interpretation, cell by cell.

Fix m and n.  Over all 2-Motzkin paths of length m+n-2, call a path
positive when the point after m-1 steps sits on an even level and
negative otherwise.  The positives minus the negatives give exactly
T(m,n).  For (m,n) = (2,3) that is 10 - 4 = 6, small enough to print in
full.
"""

from supercat import (
    enum_motzkin2,
    reverse,
    signed_count,
    signed_count_dyck,
    super_catalan_t,
    weight,
)

M, N = 2, 3
print(f"All 2-Motzkin paths of length {M + N - 2}, signed for (m,n) = ({M},{N}):")
for path in enum_motzkin2(M + N - 2):
    w = weight(path, M)
    print(f"  {'+' if w > 0 else '-'}  {path.steps:<4} levels {list(path.levels)}")

cell = signed_count(M, N)
print(f"tally: {cell.positive} positive, {cell.negative} negative, "
      f"difference {cell.difference} = T({M},{N}) = {super_catalan_t(M, N)}")

print()
print("The same tally read off Dyck paths of length 2m+2n-2 (level mod 4")
print("at the point after 2m-1 steps):", signed_count_dyck(M, N))

print()
print("Reading a path right to left swaps the roles of m and n without")
print("changing the sign, which is why T(m,n) = T(n,m):")
for steps in ("SUD", "UWDS", "UUDDW"):
    path = next(p for p in enum_motzkin2(len(steps)) if p.steps == steps)
    mirrored = reverse(path)
    m = 2
    n = len(steps) + 2 - m
    print(f"  {path.steps:<6} weight at m={m}: {weight(path, m):+d}   "
          f"reverse {mirrored.steps:<6} weight at n={n}: {weight(mirrored, n):+d}")
