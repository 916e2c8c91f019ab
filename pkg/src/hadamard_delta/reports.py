"""Report records produced by the verification suites."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

# per-check ceiling; suites trim further to the configured limit
COUNTEREXAMPLE_CAP = 1000


@dataclass(frozen=True)
class Counterexample:
    operation: str
    inputs: str
    expected: str
    actual: str


@dataclass
class CheckResult:
    """Tally for one named property checked over many instances."""

    name: str
    instances: int = 0
    passed: int = 0
    failed: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    def record(self, ok: bool, operation: str = "", inputs="", expected="", actual=""):
        """Tally one instance.  ``inputs``/``expected``/``actual`` may be
        zero-argument callables; they are only rendered on failure."""
        self.instances += 1
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.counterexamples) < COUNTEREXAMPLE_CAP:
            texts = [x() if callable(x) else str(x) for x in (inputs, expected, actual)]
            self.counterexamples.append(Counterexample(operation or self.name, *texts))

    def merge(self, other: "CheckResult") -> "CheckResult":
        self.instances += other.instances
        self.passed += other.passed
        self.failed += other.failed
        room = COUNTEREXAMPLE_CAP - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[:max(room, 0)])
        return self

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class CheckSummary:
    name: str
    instances: int
    passed: int
    failed: int


@dataclass
class SuiteReport:
    suite: str
    config: dict
    instances: int
    passed: int
    failed: int
    counterexamples: list[Counterexample]
    checks: list[CheckSummary] = field(default_factory=list)

    @classmethod
    def from_checks(cls, suite: str, config: dict, checks: list[CheckResult], limit: int) -> "SuiteReport":
        checks = sorted(checks, key=lambda c: c.name)
        examples = [ce for c in checks for ce in c.counterexamples][:limit]
        return cls(
            suite=suite,
            config=dict(config),
            instances=sum(c.instances for c in checks),
            passed=sum(c.passed for c in checks),
            failed=sum(c.failed for c in checks),
            counterexamples=examples,
            checks=[CheckSummary(c.name, c.instances, c.passed, c.failed) for c in checks],
        )

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteReport":
        return cls(
            suite=data["suite"],
            config=dict(data["config"]),
            instances=data["instances"],
            passed=data["passed"],
            failed=data["failed"],
            counterexamples=[Counterexample(**ce) for ce in data["counterexamples"]],
            checks=[CheckSummary(**c) for c in data.get("checks", [])],
        )

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {self.passed}/{self.instances} passed, {self.failed} failed"]
        for c in self.checks:
            status = "PASS" if c.failed == 0 else "FAIL"
            lines.append(f"  [{status}] {c.name}: {c.passed}/{c.instances}")
        for ce in self.counterexamples:
            lines.append(
                f"  counterexample {ce.operation}: {ce.inputs} expected {ce.expected} got {ce.actual}"
            )
        return "\n".join(lines)
