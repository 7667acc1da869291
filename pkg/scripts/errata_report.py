#!/usr/bin/env python3
"""Emit the full errata report: every printed-vs-computed delta with evidence."""

import json

from octasphere.suites import run_suite

rep = run_suite("all", 2)
print(json.dumps({"passed": rep["passed"], "paper_deltas": rep["paper_deltas"]},
                 indent=2))
