"""Outcome records for law checks.  Failures are data, not exceptions."""
from dataclasses import dataclass, field


@dataclass
class TriangleReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


@dataclass
class AdjunctionReport:
    naturality_failures: list = field(default_factory=list)
    triangle_failures: list = field(default_factory=list)
    bijection_failures: list = field(default_factory=list)
    checked: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not (self.naturality_failures or self.triangle_failures or self.bijection_failures)

    def all_failures(self):
        return self.naturality_failures + self.triangle_failures + self.bijection_failures

    def summary_lines(self):
        lines = [f"{name}: {count}" for name, count in sorted(self.checked.items())]
        for kind in ("naturality_failures", "triangle_failures", "bijection_failures"):
            failures = getattr(self, kind)
            lines.append(f"{kind}: {len(failures)}")
            for w in failures:
                lines.append("  " + "; ".join(f"{k}={v}" for k, v in w.items()))
        return lines
