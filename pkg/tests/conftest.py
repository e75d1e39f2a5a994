import os
import sys
from collections import OrderedDict

sys.path.insert(0, os.path.dirname(__file__))

# criterion id -> list of (part, passed, detail), filled by test_acceptance.py
ACCEPTANCE_RESULTS = OrderedDict()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE_RESULTS, key=int):
        parts = ACCEPTANCE_RESULTS[criterion]
        ok = all(passed for _, passed, _ in parts)
        terminalreporter.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}")
        for part, passed, detail in parts:
            terminalreporter.write_line(f"    {part}: {'pass' if passed else 'FAIL'} ({detail})")
