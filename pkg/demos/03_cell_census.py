"""The closed-form census: seed table, recursion, Euler characteristics,
and the m = 2 array identities."""

from gridmorse import (census_table, dimension_bounds, euler_closed_form,
                       riordan_T, riordan_identity_check)

print("=" * 64)
print("m=2 census table, nonzero entries through n=12")
print("=" * 64)
table = census_table(2, 12)
for n in range(13):
    b = dimension_bounds(2, n)
    print("  n=%2d  support [%d, %d]  %s" % (n, b.d_min, b.d_max, table.row_counts(n)))

print()
print("the d-by-d cell counts grow fast; row n=40 of the m=2 table:")
big = census_table(2, 40)
print("  ", big.row_counts(40))

print()
print("=" * 64)
print("euler characteristics")
print("=" * 64)
print("even m (three-term recursion):",
      [euler_closed_form(2, n) for n in range(12)])
print("odd  m (period four):         ",
      [euler_closed_form(3, n) for n in range(12)])

print()
print("=" * 64)
print("m=2 entries form a Riordan-style array")
print("=" * 64)
print("T(j,k) for j = 0..6:")
for j in range(7):
    print("  ", [riordan_T(j, k) for k in range(j + 1)])
print("identity C[n][d] = T(n-d+2, 3d-2n) through n=30:",
      riordan_identity_check(30))
print("sample: C[4][3] = %d = T(3,1)" % table.value(4, 3))
