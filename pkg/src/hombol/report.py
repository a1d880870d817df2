"""Check reports: per-axiom verdicts with exact counterexamples."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .core import Grading, SuperVector


@dataclass(frozen=True)
class Counterexample:
    args: tuple[int, ...]
    residual: SuperVector

    def describe(self, grading: Grading | None = None) -> str:
        names = [grading.label(i) if grading else str(i) for i in self.args]
        return f"({', '.join(names)}) -> {self.residual.render(grading)}"


@dataclass(frozen=True)
class Verdict:
    axiom: str
    counterexamples: tuple[Counterexample, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def failing_args(self) -> frozenset[tuple[int, ...]]:
        return frozenset(c.args for c in self.counterexamples)


@dataclass(frozen=True)
class CheckReport:
    suite: str
    verdicts: tuple[Verdict, ...] = ()
    algebra: str = ""
    grading: Grading | None = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def axioms(self) -> tuple[str, ...]:
        return tuple(v.axiom for v in self.verdicts)

    def __getitem__(self, axiom: str) -> Verdict:
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        raise KeyError(axiom)

    def failed_axioms(self) -> list[str]:
        return [v.axiom for v in self.verdicts if not v.passed]

    def signature(self) -> dict[str, frozenset]:
        """Axiom -> set of (args, residual) pairs; used to compare checkers."""
        return {
            v.axiom: frozenset((c.args, c.residual) for c in v.counterexamples)
            for v in self.verdicts
        }

    def merged(self, other: "CheckReport", suite: str | None = None) -> "CheckReport":
        return CheckReport(
            suite or self.suite, self.verdicts + other.verdicts, self.algebra, self.grading
        )

    def render(self, max_examples: int = 5) -> str:
        head = f"suite {self.suite}"
        if self.algebra:
            head += f" on {self.algebra}"
        lines = [f"{head}: {'PASS' if self.passed else 'FAIL'}"]
        for v in self.verdicts:
            n = len(v.counterexamples)
            status = "pass" if v.passed else f"FAIL ({n} counterexample{'s' if n != 1 else ''})"
            lines.append(f"  {v.axiom:<16} {status}")
            for c in v.counterexamples[:max_examples]:
                lines.append(f"      {c.describe(self.grading)}")
            if n > max_examples:
                lines.append(f"      ... {n - max_examples} more")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        g = self.grading
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "pass": self.passed,
            "axioms": [
                {
                    "axiom": v.axiom,
                    "pass": v.passed,
                    "counterexamples": [
                        {
                            "args": [g.label(i) if g else i for i in c.args],
                            "residual": [str(x) for x in c.residual],
                        }
                        for c in v.counterexamples
                    ],
                }
                for v in self.verdicts
            ],
        }


def verdict(axiom: str, failures: Iterable[tuple[Sequence[int], SuperVector]]) -> Verdict:
    return Verdict(axiom, tuple(Counterexample(tuple(a), r) for a, r in failures))
