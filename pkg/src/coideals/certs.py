"""Uniform check reports.

Every verification op accumulates named boolean checks with optional
witnesses (a human-readable, deterministic description of the first
violation).  Constructors that must not hand back unverified data raise
VerificationFailed carrying the report.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Check:
    name: str
    ok: bool
    witness: str | None = None

    def line(self):
        if self.ok:
            return f"check {self.name} ok"
        w = f" witness {self.witness}" if self.witness else ""
        return f"check {self.name} FAIL{w}"


class CertReport:
    def __init__(self, subject):
        self.subject = subject
        self.checks = []
        self.assumptions = []

    def add(self, name, ok, witness=None):
        self.checks.append(Check(name, bool(ok), witness))
        return ok

    def assume(self, note):
        if note not in self.assumptions:
            self.assumptions.append(note)

    def merge(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))
        for a in other.assumptions:
            self.assume(a)
        return self

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __str__(self):
        lines = [f"subject {self.subject}"]
        lines += [c.line() for c in self.checks]
        lines += [f"assume {a}" for a in self.assumptions]
        return "\n".join(lines)


class VerificationFailed(ValueError):
    def __init__(self, report):
        self.report = report
        fails = ", ".join(c.name for c in report.failures()) or "unknown"
        super().__init__(f"{report.subject}: failed checks: {fails}")
