"""Run reports: deterministic JSON plus a human text rendering.

Checks whose name starts with 'expect-fail' invert their polarity: they
document printed formulas that the model refutes, so the suite passes when
they fail.  JSON output carries no timing (identical configurations must
serialize byte-identically); the text rendering shows it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    suite: str
    config: dict
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, name, ok, witness=None):
        self.checks.append((str(name), bool(ok), witness))

    def extend(self, pairs):
        for name, ok in pairs:
            self.add(name, ok)

    @property
    def passed(self):
        return all(self.effective_status(name, ok) for name, ok, _ in self.checks)

    @staticmethod
    def effective_status(name, ok):
        if name.startswith("expect-fail"):
            return not ok
        return ok

    def to_json_dict(self):
        checks = []
        for name, ok, witness in self.checks:
            status = "pass" if self.effective_status(name, ok) else "fail"
            if name.startswith("expect-fail") and not ok:
                status = "xfail"
            entry = {"name": name, "status": status}
            if witness is not None and status == "fail":
                entry["witness"] = witness
            checks.append(entry)
        return {
            "schema": 1,
            "suite": self.suite,
            "config": {k: self.config[k] for k in sorted(self.config)},
            "passed": self.passed,
            "checks": checks,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self):
        lines = ["suite %s: %s (%.2fs)" % (self.suite, "PASS" if self.passed else "FAIL", self.elapsed)]
        for name, ok, witness in self.checks:
            status = "ok" if self.effective_status(name, ok) else "FAIL"
            if name.startswith("expect-fail") and not ok:
                status = "xfail"
            lines.append("  [%s] %s" % (status, name))
            if witness is not None and status == "FAIL":
                lines.append("        witness: %s" % (witness,))
        return "\n".join(lines) + "\n"
