"""Batch analysis: run the bundled corpus and emit a report.

The same machinery backs the `germlab` command line tool; this script
drives it as a library.  Entries are plain text blocks; every entry is
analyzed independently (optionally in parallel), checked against its
recorded expectations, and serialized deterministically.
"""

import json

from germlab import (
    RunConfig,
    analyze_entry,
    bundled_corpus,
    emit_csv,
    emit_json,
    parse_entry,
    run_corpus,
)

entries = bundled_corpus()
print(f"bundled corpus: {len(entries)} entries")
print("first few:", ", ".join(e.name for e in entries[:6]), "...")

# One entry, full detail.
report = analyze_entry(entries[0], RunConfig())
print(f"\n{report.name}: n={report.n} k={report.k} mu={report.mu} tau={report.tau}")
for name, outcome in sorted(report.checks.items()):
    state = {True: "ok", False: "FAIL", None: "info"}[outcome.ok]
    print(f"  {name:22s} [{state}] {outcome.detail}")

# The whole corpus, with the expectation checks only (fastest).
config = RunConfig(checks=())
reports, code = run_corpus(entries, config)
print("\nexit code:", code)
print(emit_csv(reports).decode())

# Custom entries parse from text; reports serialize to stable JSON.
entry = parse_entry("name = demo\nvars = x, y\nf = x^4 + y^3\nexpect_mu = 6\n")
reports, code = run_corpus([entry], config)
payload = json.loads(emit_json(reports, config))
print("demo entry as JSON:", json.dumps(payload["entries"][0], indent=2)[:200], "...")
