# coding: utf-8
# Copyright (c) 2024, 2026 cutcount developers.
# Licensed under the Universal Permissive License v 1.0 as shown at https://oss.oracle.com/licenses/upl/
import csv
import io
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import fsspec

from .patterns.catalog import build_catalog

logger = logging.getLogger("cutcount")

REPORT_FORMATS = ("json", "csv")
CSV_COLUMNS = ("size", "id", "name", "noninduced", "induced")


@dataclass
class CountReport:
    """Everything one run of the pipeline produced.

    ``sizes`` maps a pattern size to ``{"noninduced": {...}, "induced":
    {...}}``; non-induced counts exist for connected patterns only, induced
    counts for the whole atlas of that size. Optional sections stay ``None``
    (or empty) when they were not requested so that reports of identical runs
    are byte-identical.
    """

    metadata: Dict[str, object]
    sizes: Dict[int, Dict[str, Dict[str, int]]] = field(default_factory=dict)
    stats: Dict[str, object] = field(default_factory=dict)
    profiles: Optional[Dict[str, object]] = None
    trends: Optional[Dict[str, object]] = None
    timings: Optional[Dict[str, float]] = None
    oracle_check: Optional[str] = None

    def add_counts(self, counts):
        """Record a :class:`~cutcount.triads.PatternCounts`."""
        self.sizes[counts.size] = {
            "noninduced": dict(counts.noninduced),
            "induced": counts.all_induced(),
        }

    def induced(self, size: int) -> Dict[str, int]:
        return self.sizes[size]["induced"]

    def noninduced(self, size: int) -> Dict[str, int]:
        return self.sizes[size]["noninduced"]

    def to_dict(self) -> dict:
        catalog = build_catalog()
        sizes = {}
        for size in sorted(self.sizes):
            entry = {}
            section = self.sizes[size]
            for p in catalog.patterns(size):
                if p.pid not in section["induced"]:
                    continue
                row = {"name": p.name}
                if p.pid in section["noninduced"]:
                    row["noninduced"] = str(section["noninduced"][p.pid])
                row["induced"] = str(section["induced"][p.pid])
                entry[p.pid] = row
            sizes[str(size)] = entry
        document = {"metadata": self.metadata, "sizes": sizes, "stats": self.stats}
        for key in ("profiles", "trends", "timings", "oracle_check"):
            value = getattr(self, key)
            if value is not None:
                document[key] = value
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_dict(cls, document: dict) -> "CountReport":
        sizes = {}
        for size, entry in document.get("sizes", {}).items():
            sizes[int(size)] = {
                "noninduced": {
                    pid: int(row["noninduced"]) for pid, row in entry.items() if "noninduced" in row
                },
                "induced": {pid: int(row["induced"]) for pid, row in entry.items()},
            }
        return cls(
            metadata=document.get("metadata", {}),
            sizes=sizes,
            stats=document.get("stats", {}),
            profiles=document.get("profiles"),
            trends=document.get("trends"),
            timings=document.get("timings"),
            oracle_check=document.get("oracle_check"),
        )

    @classmethod
    def from_json(cls, text: str) -> "CountReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        """The count table as CSV; metadata and optional sections are JSON-only."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for size, entry in self.to_dict()["sizes"].items():
            for pid, row in entry.items():
                writer.writerow((size, pid, row["name"], row.get("noninduced", ""), row["induced"]))
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "CountReport":
        sizes: Dict[int, Dict[str, Dict[str, int]]] = {}
        for row in csv.DictReader(io.StringIO(text)):
            section = sizes.setdefault(int(row["size"]), {"noninduced": {}, "induced": {}})
            if row["noninduced"]:
                section["noninduced"][row["id"]] = int(row["noninduced"])
            section["induced"][row["id"]] = int(row["induced"])
        return cls(metadata={}, sizes=sizes)

    def dumps(self, fmt: str = "json") -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown report format {fmt!r}; expected one of {REPORT_FORMATS}")


def write_report(report: CountReport, urlpath: str, fmt: str = "json", storage_options: Optional[dict] = None):
    """Serialize ``report`` to any fsspec URL."""
    storage_options = storage_options or dict()
    with fsspec.open(urlpath, mode="wt", **storage_options) as f:
        f.write(report.dumps(fmt))
    logger.debug(f"Wrote {fmt} report to {urlpath}")


def read_report(urlpath: str, storage_options: Optional[dict] = None) -> CountReport:
    storage_options = storage_options or dict()
    with fsspec.open(urlpath, mode="rt", **storage_options) as f:
        text = f.read()
    if urlpath.endswith(".csv"):
        return CountReport.from_csv(text)
    return CountReport.from_json(text)


def _ratio(numerator: int, denominator: int) -> Optional[float]:
    if not denominator:
        return None
    return float(Fraction(numerator, denominator))


def emit_trends(report: CountReport) -> Dict[str, object]:
    """Edge-prediction trends of a report.

    * ``edge_likelihood``: for every connected pattern, ``1 - C/N``, the
      share of its copies that carry an extra edge;
    * ``transitivity``: share of 4-cycle copies closed into a diamond, and of
      ``K_{2,3}`` copies whose two hubs are adjacent;
    * ``wheel``: share of wheel copies and of eared 4-clique copies that sit
      inside an almost 5-clique, and the ratio between the two.

    Undefined ratios are ``None``.
    """
    catalog = build_catalog()
    likelihood = {}
    for size in sorted(report.sizes):
        noninduced, induced = report.noninduced(size), report.induced(size)
        for pid, n in noninduced.items():
            share = _ratio(induced[pid], n)
            likelihood[pid] = None if share is None else 1.0 - share
    trends: Dict[str, object] = {"edge_likelihood": likelihood}

    if 4 in report.sizes:
        n4, c4 = report.noninduced(4), report.induced(4)
        closed = c4["4-5"] * _occurrences(catalog, 4, "4-4", "4-5")
        trends.setdefault("transitivity", {})["two_common_neighbours"] = _ratio(closed, n4["4-4"])

    if 5 in report.sizes:
        n5, c5 = report.noninduced(5), report.induced(5)
        closed = c5["5-14"] * _occurrences(catalog, 5, "5-13", "5-14")
        trends.setdefault("transitivity", {})["three_common_neighbours"] = _ratio(closed, n5["5-13"])
        wheel = _ratio(c5["5-20"] * _occurrences(catalog, 5, "5-18", "5-20"), n5["5-18"])
        eared = _ratio(c5["5-20"] * _occurrences(catalog, 5, "5-19", "5-20"), n5["5-19"])
        trends["wheel"] = {
            "wheel_to_almost_five_clique": wheel,
            "eared_four_clique_to_almost_five_clique": eared,
            "ratio": wheel / eared if wheel is not None and eared else None,
        }
    return trends


def _occurrences(catalog, size: int, small: str, big: str) -> int:
    ids: List[str] = [p.pid for p in catalog.patterns(size)]
    return int(catalog.occurrence_matrix(size)[ids.index(small), ids.index(big)])
