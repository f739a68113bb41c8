"""Uniform result records for every relation check.

A report says what was checked (id, kind, inputs), what happened
(status, residual_summary) and how to read it (expected, gating): a
check whose residual is supposed to be nonzero, such as the
deliberately non-commuting pairs, reports status "fail" with expected
"nonzero" and still counts as ok.  Only gating checks with ok False
make a run fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class RelationReport:
    id: str
    kind: str
    inputs: dict
    status: str  # "pass" (zero residual) | "fail" (nonzero residual)
    residual_summary: dict = field(default_factory=dict)
    expected: str = "zero"  # "zero" | "nonzero"
    gating: bool = True

    @property
    def ok(self) -> bool:
        return (self.status == "pass") == (self.expected == "zero")

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "inputs": self.inputs,
            "status": self.status,
            "expected": self.expected,
            "ok": self.ok,
            "gating": self.gating,
            "residual_summary": self.residual_summary,
        }


def residual_report(
    id: str,
    kind: str,
    inputs: dict,
    residual,
    max_weight=None,
    expected: str = "zero",
    gating: bool = True,
    note: str = None,
) -> RelationReport:
    """Build a report from a residual operator.

    max_weight restricts the inspection to columns of that weight or
    less (used when a relation is only exact away from the truncation
    edge); the restriction is recorded in the summary.
    """
    count, sample = residual.nonzero_in_columns(max_weight)
    summary = {"nonzero_entries": count, "sample": sample}
    if max_weight is not None:
        summary["column_weight_limit"] = max_weight
    if note is not None:
        summary["note"] = note
    return RelationReport(
        id=id,
        kind=kind,
        inputs=inputs,
        status="pass" if count == 0 else "fail",
        residual_summary=summary,
        expected=expected,
        gating=gating,
    )
