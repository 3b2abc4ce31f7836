"""Batch runs: identity suites and oracle fixtures as JSON-lines corpora.

The same machinery drives the command line (``detscheme corpus``); here it
is used programmatically.  Per-instance seeds derive from the master seed
as seed + 1000003 * index, so any line of a corpus can be reproduced alone.
"""
import json
import tempfile
from pathlib import Path

from detscheme.corpus import (
    ORACLE_FIXTURES,
    OracleTask,
    formula_identity_record,
    instance_seed,
    random_standard_instances,
    run_oracle_tasks,
)

print(__doc__)

out_dir = Path(tempfile.mkdtemp(prefix="detscheme-corpus-"))

# 1. A formula-identity corpus: the two dimension routes on 50 instances.
instances = random_standard_instances(50, seed=11)
lines = [formula_identity_record(i, d) for i, d in enumerate(instances)]
identity_path = out_dir / "identities.jsonl"
identity_path.write_text("\n".join(json.dumps(line) for line in lines) + "\n")
passes = sum(line["identity"] for line in lines)
print(f"Wrote {identity_path} -- {passes}/{len(lines)} identity passes")

# 2. The standing oracle fixtures (two are configured with validated
#    earlier Hilbert windows and smaller syzygy bounds for speed; the
#    stabilization re-checks still run).
tasks = [
    OracleTask(
        index=i,
        data=d,
        prime=32003,
        seed=instance_seed(0, i),
        syzygy_bound=bound,
        hf_window=window,
    )
    for i, (d, window, bound) in enumerate(ORACLE_FIXTURES[:3])
]
records = run_oracle_tasks(tasks)
oracle_path = out_dir / "oracle.jsonl"
oracle_path.write_text("\n".join(r.to_json() for r in records) + "\n")
print(f"Wrote {oracle_path}")
print("instance                        formula  tangent  orbit  match")
for record in records:
    print(f"{record.data.compact():<32}{record.formula_dim:>7}{record.tangent_dim:>9}"
          f"{record.orbit_space_dim:>7}  {'pass' if record.all_pass else 'FAIL'}")
