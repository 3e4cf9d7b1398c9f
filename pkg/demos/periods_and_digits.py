#!/usr/bin/env python3
"""Periodicity of the involution counts modulo m.

Modulo an odd m the count sequence is purely periodic with smallest period
exactly m.  Modulo an even m = 2^k * ell it is only eventually periodic:
the preperiod is exactly 4k - 2 and the tail's smallest period is ell.
The odd factors (counts with all powers of two divided out) are purely
periodic mod 2^s with smallest period 2^(s+1).  Every report below carries
machine-checkable witnesses for the minimality claims.
"""

import json

from involution_lab.algebra import val2
from involution_lab.periodicity import (
    involution_mod_period,
    involution_mod_prefix,
    odd_factor_mod_prefix,
    odd_factor_period,
)

print("counts mod m:")
print("  m | preperiod | period | (for even m = 2^k ell: expect 4k-2, ell)")
for m in (3, 7, 15, 2, 4, 8, 12, 96):
    rep = involution_mod_period(m)
    note = ""
    if m % 2 == 0:
        k = val2(m)
        note = f"expected ({4 * k - 2}, {m >> k})"
    print(f"{m:3d} | {rep.preperiod:9d} | {rep.period:6d} | {note}")

print()
print("The first values mod 12 show the preperiod of 6 directly:")
print(" ", involution_mod_prefix(12, 24))

print()
print("Odd factors mod 8 repeat every 16 (and not every 8):")
print(" ", odd_factor_mod_prefix(3, 32))
report = odd_factor_period(3)
print("report:", json.dumps(report.to_json_obj(), sort_keys=True))
dd = dict(report.rejected_divisors)
print(f"e.g. period 8 is rejected: indices {dd[8]} and {dd[8] + 8} hold different values.")
