"""The desk-scale rank-excess scan.

At dimension floor((9n+9)/13) the m = 2 chain rank usually exceeds the sum
of its two neighbors, which forces free homology there.  Scanning rows
n = 0..99 shows the pattern holding everywhere except eight values of n,
all of them late in the range; the excess argument loses force as n grows.
"""

from gridmorse import census_table, observation_scan

holds, exceptions = observation_scan(99)
print("rank-excess holds for %d of 100 rows" % len(holds))
print("exceptions:", exceptions)

print()
print("what failure looks like (n = 48):")
table = census_table(2, 50)
for n in (47, 48, 49):
    delta = (9 * n + 9) // 13
    mid = table.value(n, delta)
    lo = table.value(n, delta - 1)
    hi = table.value(n, delta + 1)
    verdict = "excess" if mid > lo + hi else "no excess"
    print("  n=%d d=%d: %d vs %d + %d  -> %s" % (n, delta, mid, lo, hi, verdict))
