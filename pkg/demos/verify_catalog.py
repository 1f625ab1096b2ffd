"""Verify every built-in hook length formula, in parallel.

Run: python3 demos/verify_catalog.py [jobs]
"""

import sys
import time

from hooklab.catalog import cross_identities, tree_cross_identities, verify_all

jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 4
start = time.perf_counter()
summary = verify_all(jobs=jobs)
for r in summary.reports:
    print(r.line())
print(f"{len(summary.reports)} entries in {time.perf_counter() - start:.1f}s, ok={summary.ok}")
for kind, c in sorted(summary.counts().items()):
    print(f"  {kind}: {c['pass']} pass, {c['fail']} fail, {c['conjecture']} conjecture")
for check in cross_identities() + tree_cross_identities():
    print(f"{'PASS' if check.passed else 'FAIL'}  {check.name}")
