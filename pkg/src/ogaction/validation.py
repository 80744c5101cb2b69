"""Report-style validation results keyed by clause labels."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Issue:
    clause: str
    message: str

    def __str__(self):
        return f"[{self.clause}] {self.message}"


@dataclass
class ValidationReport:
    """Violations found while checking a fixed list of clauses.

    `checked` lists every clause label that was evaluated, so a report can
    be rendered as per-clause booleans even when no issue was found.
    """

    subject: str
    checked: tuple[str, ...]
    issues: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, clause: str, message: str) -> None:
        self.issues.append(Issue(clause, message))

    def clause_ok(self, clause: str) -> bool:
        return all(issue.clause != clause for issue in self.issues)

    def clauses(self) -> dict[str, bool]:
        return {label: self.clause_ok(label) for label in self.checked}

    def merge(self, other: "ValidationReport", prefix: str = "") -> None:
        for issue in other.issues:
            label = f"{prefix}{issue.clause}" if prefix else issue.clause
            self.issues.append(Issue(label, issue.message))

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok ({len(self.checked)} clauses)"
        lines = [f"{self.subject}: {len(self.issues)} violation(s)"]
        lines += [f"  {issue}" for issue in self.issues]
        return "\n".join(lines)
