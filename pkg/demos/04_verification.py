"""Run the full verification harness and inspect a few entries."""

# %%
from twisted_hv.verify import FLAGGED, verify_all

report = verify_all(window=8)
for entry in report.entries:
    print(f"{entry.status:>20}  {entry.claim_id:<36} {entry.value[:60]}")

# %% One printed relation disagrees with the structure constants, and the harness flags it.
for entry in report.entries:
    if entry.status == FLAGGED:
        print(entry.claim_id, "-", entry.statement)
        print("  ", entry.note)

# %%
print("overall ok:", report.ok)
