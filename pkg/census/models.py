"""
Descent Census - Data Models
"""
import csv
import io
from typing import Optional

from pydantic import BaseModel, Field


class CensusTable(BaseModel):
    """Histogram of statistic vectors from a brute-force enumeration"""
    family: str
    n: int
    filter: str = "all"
    stats: list[str]
    counts: dict[tuple[int, ...], int] = Field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def marginal(self, keep: list[str]) -> dict[tuple[int, ...], int]:
        """Sum out every statistic not named in keep"""
        idx = [self.stats.index(name) for name in keep]
        result: dict[tuple[int, ...], int] = {}
        for key, count in self.counts.items():
            sub = tuple(key[i] for i in idx)
            result[sub] = result.get(sub, 0) + count
        return result

    def sorted_rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([*self.stats, "count"])
        for key, count in self.sorted_rows():
            writer.writerow([*key, count])
        return buffer.getvalue()

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "filter": self.filter,
            "stats": self.stats,
            "rows": [{"key": list(key), "count": count} for key, count in self.sorted_rows()],
            "total": self.total(),
        }


class CheckResult(BaseModel):
    """Outcome of one identity or oracle check"""
    name: str
    passed: bool
    detail: str = ""
    n: Optional[int] = None


class VerificationReport(BaseModel):
    suite: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def extend(self, results: list[CheckResult]) -> None:
        self.checks.extend(results)


class TableRow(BaseModel):
    label: str
    values: list[int]


class FamilyTable(BaseModel):
    """A family laid out like the printed tables: statistic rows, one column per n, TOTAL last"""
    family: str
    row_header: str
    n_values: list[int]
    rows: list[TableRow] = Field(default_factory=list)
    totals: list[int] = Field(default_factory=list)
