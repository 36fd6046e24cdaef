"""Run the complete claim suite.

Every golden table, every independence certificate, the stated
counterexamples, the semantic lemma checks, and the minimality/uniqueness
searches, each as a named claim with timing and machine-readable evidence.
The two size-8 uniqueness searches are skipped by default; pass
include_long_running=True to attempt them under a node budget.
"""

import json

from relalg import run_verification_suite

report = run_verification_suite(include_long_running=False)
print(report.render())
print()

# The same report as JSON (what `relalg verify-paper --json` prints).
doc = report.to_dict()
failing = [c for c in doc["claims"] if c["status"] == "fail"]
print(f"claims: {len(doc['claims'])}, failing: {len(failing)}")
print("sample claim record:")
print(json.dumps(doc["claims"][0], indent=2))
