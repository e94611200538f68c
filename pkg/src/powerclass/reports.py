"""Report rows and deterministic text/CSV/JSON emitters.

Determinism contract: for fixed inputs the text and CSV bodies are
byte-identical across runs.  Anything timing-related (per-row wall time,
totals) is segregated: the JSON payload carries per-row ``wall_time``
fields, while text and CSV confine timing to ``#``-prefixed footer lines
that consumers strip before comparing.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

SCHEMA_VERSION = 1

STATUS_VERIFIED = "verified"
STATUS_VACUOUS = "vacuous"
STATUS_FAILED = "FAILED"


@dataclass(frozen=True)
class ReportRow:
    group: str
    prime: int
    theorem: str
    hypothesis: bool
    conclusion: Optional[bool]
    status: str
    witnesses: Optional[Dict[str, object]] = None
    wall_time: float = 0.0


def make_row(
    group: str,
    prime: int,
    theorem: str,
    hypothesis: bool,
    conclusion: Optional[bool],
    witnesses: Optional[Dict[str, object]] = None,
    wall_time: float = 0.0,
) -> ReportRow:
    """Build a row with the status derived, never passed in.

    FAILED exactly when the hypothesis held and the conclusion did not; a
    false or unevaluated conclusion under a false hypothesis is vacuous.
    """
    if hypothesis and conclusion is None:
        raise ValueError("conclusion must be evaluated when the hypothesis holds")
    if hypothesis:
        status = STATUS_VERIFIED if conclusion else STATUS_FAILED
    else:
        status = STATUS_VACUOUS
    return ReportRow(
        group=group,
        prime=prime,
        theorem=theorem,
        hypothesis=hypothesis,
        conclusion=conclusion,
        status=status,
        witnesses=witnesses,
        wall_time=wall_time,
    )


def _witness_text(witnesses: Optional[Dict[str, object]]) -> str:
    if not witnesses:
        return ""
    return json.dumps(witnesses, sort_keys=True, separators=(",", ":"))


def _tri(value: Optional[bool]) -> str:
    return "-" if value is None else str(value)


@dataclass(frozen=True)
class VerificationReport:
    rows: Tuple[ReportRow, ...]

    @property
    def failed_rows(self) -> Tuple[ReportRow, ...]:
        return tuple(r for r in self.rows if r.status == STATUS_FAILED)

    @property
    def verified_count(self) -> int:
        return sum(1 for r in self.rows if r.status == STATUS_VERIFIED)

    @property
    def vacuous_count(self) -> int:
        return sum(1 for r in self.rows if r.status == STATUS_VACUOUS)

    @property
    def total_wall_time(self) -> float:
        return sum(r.wall_time for r in self.rows)

    def exit_code(self) -> int:
        return 1 if self.failed_rows else 0

    def summary_line(self) -> str:
        return (
            f"rows={len(self.rows)} verified={self.verified_count}"
            f" vacuous={self.vacuous_count} failed={len(self.failed_rows)}"
        )

    def _footer_lines(self) -> Tuple[str, ...]:
        return (
            f"# {self.summary_line()}",
            f"# wall_time_total={self.total_wall_time:.2f}s",
        )

    def to_text(self) -> str:
        header = f"{'group':<12} {'p':>2} {'theorem':<17} {'status':<8} {'hyp':<5} {'concl':<5} witnesses"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(
                f"{r.group:<12} {r.prime:>2} {r.theorem:<17} {r.status:<8}"
                f" {str(r.hypothesis):<5} {_tri(r.conclusion):<5} {_witness_text(r.witnesses)}".rstrip()
            )
        lines.extend(self._footer_lines())
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["group", "prime", "theorem", "hypothesis", "conclusion", "status", "witnesses"])
        for r in self.rows:
            writer.writerow(
                [r.group, r.prime, r.theorem, r.hypothesis, _tri(r.conclusion), r.status, _witness_text(r.witnesses)]
            )
        for line in self._footer_lines():
            buf.write(line + "\n")
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "schema": SCHEMA_VERSION,
            "rows": [
                {
                    "group": r.group,
                    "prime": r.prime,
                    "theorem": r.theorem,
                    "hypothesis": r.hypothesis,
                    "conclusion": r.conclusion,
                    "status": r.status,
                    "witnesses": r.witnesses,
                    "wall_time": round(r.wall_time, 6),
                }
                for r in self.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown report format {fmt!r}")


def strip_footer(body: str) -> str:
    """Drop '#'-prefixed footer lines (the non-deterministic part)."""
    return "\n".join(line for line in body.splitlines() if not line.startswith("#")) + "\n"


def report_from(rows: Iterable[ReportRow]) -> VerificationReport:
    return VerificationReport(rows=tuple(rows))
