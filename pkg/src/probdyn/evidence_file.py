"""Reading and writing evidence files.

An evidence file is a JSON object holding exactly one payload kind
(``evidences``, ``weighted_set``, ``joint``, ``first_order``, ``contingency``
or ``bet``), an optional ``report`` object with derived numbers, and a
``partition`` list where the payload needs cell names. Floats are written in
shortest round-trip form, so re-reading a written file reproduces it bit for
bit. See ``docs/evidence_file.md`` for the schema.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .core import (
    AlphaEvidence,
    FirstOrderPrior,
    JointPrior,
    Partition,
    WeightedBinarySet,
    validate_distribution,
)
from .dutchbook import BetScenario
from .errors import ProbDynError, ValidationError
from .repair import ContingencyEvidence

__all__ = ["EvidenceFile", "PAYLOAD_KINDS", "loads", "dumps", "load", "dump"]

PAYLOAD_KINDS = ("evidences", "weighted_set", "joint", "first_order", "contingency", "bet")
_NEEDS_PARTITION = ("evidences", "weighted_set", "joint", "contingency")


@dataclass(frozen=True)
class EvidenceFile:
    """One payload (or none, for pure reports) plus an optional report mapping.

    ``payload`` is a tuple of :class:`AlphaEvidence` for ``evidences`` and the
    matching domain object for the other kinds.
    """

    kind: str | None
    payload: Any = None
    report: dict | None = field(default=None)

    @property
    def partition(self) -> Partition | None:
        if self.kind == "evidences":
            return self.payload[0].partition
        if self.kind == "weighted_set":
            return self.payload.partition
        if self.kind in ("joint", "contingency"):
            return self.payload.b_partition
        return None


def _reject_constant(name):
    raise ValidationError(f"non-finite number {name} in evidence file")


def _get(obj: dict, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise ValidationError(f"missing {key!r} in {where}")
    return obj[key]


def _number(x, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ValidationError(f"{what} must be a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise ValidationError(f"{what} must be finite")
    return x


def _numbers(xs, what: str) -> tuple[float, ...]:
    if not isinstance(xs, list):
        raise ValidationError(f"{what} must be a list")
    return tuple(_number(x, what) for x in xs)


def _table(rows, what: str):
    if not isinstance(rows, list) or len(rows) != 2:
        raise ValidationError(f"{what} must be a list of two rows")
    return tuple(_numbers(row, what) for row in rows)


def _parse_payload(kind: str, doc: dict):
    body = doc[kind]
    if kind == "first_order":
        return FirstOrderPrior(
            _number(_get(body, "pA", kind), "pA"),
            _number(_get(body, "pAB", kind), "pAB"),
            _number(_get(body, "pB", kind), "pB"),
        )
    if kind == "bet":
        return BetScenario(
            _number(_get(body, "pB", kind), "pB"),
            _number(_get(body, "b", kind), "b"),
            _number(_get(body, "r", kind), "r"),
        )
    partition = Partition.of(_get(doc, "partition", "evidence file"))
    if kind == "evidences":
        if not isinstance(body, list) or not body:
            raise ValidationError("'evidences' must be a non-empty list")
        return tuple(
            AlphaEvidence(
                _number(_get(e, "credence", kind), "credence"),
                validate_distribution(_numbers(_get(e, "dist", kind), "dist"), partition),
            )
            for e in body
        )
    if kind == "weighted_set":
        if not isinstance(body, list):
            raise ValidationError("'weighted_set' must be a list")
        entries = tuple(
            (_number(_get(e, "credence", kind), "credence"), _number(_get(e, "q", kind), "q"))
            for e in body
        )
        return WeightedBinarySet(partition, entries)
    if kind == "joint":
        return JointPrior(
            _number(_get(body, "credence", kind), "credence"),
            partition,
            _table(_get(body, "cells", kind), "cells"),
        )
    if kind == "contingency":
        return ContingencyEvidence(
            _number(_get(body, "credence", kind), "credence"),
            _table(_get(body, "table", kind), "table"),
            partition,
        )
    raise AssertionError(kind)


def loads(text: str) -> EvidenceFile:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not a valid evidence file: {exc}") from None
    if not isinstance(doc, dict):
        raise ValidationError("an evidence file must be a JSON object")
    kinds = [k for k in PAYLOAD_KINDS if k in doc]
    if len(kinds) > 1:
        raise ValidationError(f"exactly one payload kind per file, found {kinds}")
    report = doc.get("report")
    if report is not None and not isinstance(report, dict):
        raise ValidationError("'report' must be an object")
    if not kinds:
        if report is None:
            raise ValidationError(f"no payload: expected one of {PAYLOAD_KINDS} or a report")
        return EvidenceFile(None, None, report)
    kind = kinds[0]
    try:
        payload = _parse_payload(kind, doc)
    except ProbDynError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed {kind!r} payload: {exc}") from None
    return EvidenceFile(kind, payload, report)


def _payload_doc(ef: EvidenceFile) -> dict:
    kind, p = ef.kind, ef.payload
    if kind == "evidences":
        return {
            "partition": list(p[0].partition.labels),
            "evidences": [{"credence": e.credence, "dist": list(e.probs)} for e in p],
        }
    if kind == "weighted_set":
        return {
            "partition": list(p.partition.labels),
            "weighted_set": [{"credence": k, "q": q} for k, q in p.entries],
        }
    if kind == "joint":
        return {
            "partition": list(p.b_partition.labels),
            "joint": {"credence": p.credence, "cells": [list(row) for row in p.cells]},
        }
    if kind == "contingency":
        return {
            "partition": list(p.b_partition.labels),
            "contingency": {"credence": p.credence, "table": [list(row) for row in p.table]},
        }
    if kind == "first_order":
        return {"first_order": {"pA": p.p_a, "pAB": p.p_ab, "pB": p.p_b}}
    if kind == "bet":
        return {"bet": {"pB": p.p_b, "b": p.b, "r": p.r}}
    return {}


def dumps(ef: EvidenceFile) -> str:
    doc = _payload_doc(ef)
    if ef.report is not None:
        doc["report"] = ef.report
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def load(path) -> EvidenceFile:
    return loads(Path(path).read_text())


def dump(ef: EvidenceFile, path) -> None:
    Path(path).write_text(dumps(ef))
