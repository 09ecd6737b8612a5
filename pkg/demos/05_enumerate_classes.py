# Count equivalence classes of BS(n+1, n) and compare with the reference table.
import time

from baseq import fixtures
from baseq.enumeration import count_classes

ref = fixtures.class_counts()
for n in range(0, 14):
    t = time.perf_counter()
    r = count_classes(n)
    dt = time.perf_counter() - t
    mark = "ok" if (r.class_count, r.normal_count) == ref[n] else "MISMATCH"
    print(f"{r.summary():32s} {dt:6.2f}s  {mark}")

r = count_classes(6)
print(r.to_text())
print(r.to_csv())
