"""Output records and their JSON / CSV / text renderings.

The JSON layout and CSV column order are documented in docs/FORMATS.md and
must not change without updating it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterable, Union

from hanoi_mpoly.edges import edge_census
from hanoi_mpoly.indices import IndexReport, indices_direct
from hanoi_mpoly.occupancy import HanoiParams
from hanoi_mpoly.polynomial import m_polynomial

Value = Union[int, Fraction, float]

SCHEMA_VERSION = 1
CANONICAL = "canonical"
DIAGNOSTIC = "paper-diagnostic"

INDEX_NAMES = ("edges", "m1", "m2", "mm2", "ssd", "h", "isi", "a", "f")
INTEGER_INDICES = {"edges", "m1", "m2", "f"}
CSV_COLUMNS = ("p", "n", "|E|", "M1", "M2", "MM2", "SSD", "H", "ISI", "A", "F")
EXACT_COLUMNS = ("MM2_exact", "SSD_exact", "H_exact", "ISI_exact", "A_exact")
CENSUS_FIELDS = ("total", "a1", "a2", "e1", "e2", "e3")


def round2(value: Value) -> str:
    """Two-decimal rendering, ties away from zero (as the published tables do)."""
    q = Fraction(value)
    d = Decimal(q.numerator) / Decimal(q.denominator) if q.denominator != 1 else Decimal(q.numerator)
    return str(d.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def exact_str(value: Value) -> str | None:
    """``"num/den"`` (or ``"num"``) for rationals, ``None`` for floats."""
    if isinstance(value, float):
        return None
    q = Fraction(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_exact(text: str) -> Fraction:
    return Fraction(text)


def alpha_label(alpha: Fraction) -> str:
    return str(alpha.numerator) if alpha.denominator == 1 else f"{alpha.numerator}/{alpha.denominator}"


def index_values(report: IndexReport) -> dict[str, Value]:
    out: dict[str, Value] = {name: getattr(report, name) for name in INDEX_NAMES}
    for al, v in report.r_alpha.items():
        out[f"R[{alpha_label(al)}]"] = v
    for al, v in report.rr_alpha.items():
        out[f"RR[{alpha_label(al)}]"] = v
    return out


@dataclass
class OutputRecord:
    p: int
    n: int
    terms: list[tuple[int, int, int]]
    census: dict[str, object]
    indices: dict[str, Value]
    mode: str = CANONICAL
    verification: str | None = None
    extra: dict[str, object] = field(default_factory=dict)

    # -- JSON --------------------------------------------------------------

    def to_json_obj(self) -> dict:
        idx = {}
        for name, v in self.indices.items():
            entry = {"exact": exact_str(v), "decimal": round2(v)}
            if isinstance(v, float):
                entry["float"] = v
            idx[name] = entry
        census = {k: self.census[k] for k in CENSUS_FIELDS}
        for k in ("cross", "within", "e1_class"):
            census[k] = {str(mu): c for mu, c in self.census[k].items()}
        obj = {
            "schema": SCHEMA_VERSION,
            "p": self.p,
            "n": self.n,
            "mode": self.mode,
            "polynomial": [{"i": i, "j": j, "count": c} for i, j, c in self.terms],
            "edge_census": census,
            "indices": idx,
            "verification": self.verification,
        }
        if self.extra:
            obj["extra"] = self.extra
        return obj

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json_obj(cls, obj: dict) -> OutputRecord:
        indices: dict[str, Value] = {}
        for name, entry in obj["indices"].items():
            if entry["exact"] is None:
                indices[name] = float(entry["float"])
            else:
                q = parse_exact(entry["exact"])
                indices[name] = int(q) if name in INTEGER_INDICES else q
        raw = obj["edge_census"]
        census: dict[str, object] = {k: int(raw[k]) for k in CENSUS_FIELDS}
        for k in ("cross", "within", "e1_class"):
            census[k] = {int(mu): int(c) for mu, c in raw[k].items()}
        return cls(
            p=int(obj["p"]),
            n=int(obj["n"]),
            terms=[(t["i"], t["j"], t["count"]) for t in obj["polynomial"]],
            census=census,
            indices=indices,
            mode=obj["mode"],
            verification=obj.get("verification"),
            extra=obj.get("extra", {}),
        )

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_json_obj(json.loads(text))

    # -- CSV / text --------------------------------------------------------

    def csv_row(self, exact: bool = False) -> list[str]:
        ix = self.indices
        row = [str(self.p), str(self.n), str(ix["edges"]), str(ix["m1"]), str(ix["m2"])]
        row += [round2(ix[k]) for k in ("mm2", "ssd", "h", "isi", "a")]
        row.append(str(ix["f"]))
        if exact:
            row += [exact_str(ix[k]) for k in ("mm2", "ssd", "h", "isi", "a")]
        return row

    def polynomial_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}·x^{i}·y^{j}" for i, j, c in self.terms)

    def text(self) -> str:
        lines = [self.polynomial_text(), f"H_{self.p}^{self.n} ({self.mode})"]
        c = self.census
        lines.append(
            "edges: |E|={total} a1={a1} a2={a2} e1={e1} e2={e2} e3={e3}".format(**c)
        )
        lines.append(f"cross:  {dict(c['cross'])}")
        lines.append(f"within: {dict(c['within'])}")
        width = max(len(k) for k in self.indices)
        for name, v in self.indices.items():
            ex = exact_str(v)
            shown = str(v) if name in INTEGER_INDICES else round2(v)
            tail = f"  (= {ex})" if ex is not None and name not in INTEGER_INDICES else ""
            lines.append(f"{name.upper():<{width}}  {shown}{tail}")
        if self.verification:
            lines.append(f"verification: {self.verification}")
        return "\n".join(lines)


def build_record(params: HanoiParams, alphas: Iterable | None = None) -> OutputRecord:
    poly = m_polynomial(params)
    census = edge_census(params)
    report = indices_direct(poly, alphas)
    return OutputRecord(
        p=params.p,
        n=params.n,
        terms=list(poly),
        census={
            "total": census.total,
            "a1": census.a1,
            "a2": census.a2,
            "e1": census.e1,
            "e2": census.e2,
            "e3": census.e3,
            "cross": dict(census.cross),
            "within": dict(census.within),
            "e1_class": dict(census.e1_class),
        },
        indices=index_values(report),
    )
