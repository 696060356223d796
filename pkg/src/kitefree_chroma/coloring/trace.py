"""Branch tags, case traces and the soundness error raised by every colorer."""

from __future__ import annotations

import enum

ROOT = None

# tag -> tags allowed immediately before it (ROOT = first tag of a trace)
REGISTRY: dict[str, frozenset] = {}


def _reg(tag: str, *parents) -> None:
    REGISTRY[tag] = frozenset(parents)


_reg("ktfree:lift", ROOT, "ktfree:lift")
_reg("main:empty", ROOT, "ktfree:lift")
_reg("main:hasC5", ROOT, "ktfree:lift")
_reg("main:noC5", ROOT, "ktfree:lift")
_reg("c5free:lift", ROOT, "main:noC5")
_reg("lift:trivial", "c5free:lift", "ktfree:lift")
_reg("c5k5:c9bar", ROOT, "c5free:lift")
_reg("c5k5:c7bar", ROOT, "c5free:lift")
_reg("c9bar:case1", ROOT, "c5k5:c9bar")
_reg("c9bar:case2", ROOT, "c5k5:c9bar")
_reg("c7bar:pivot", ROOT, "c5k5:c7bar")
_reg("c7bar:dominated", ROOT, "c5k5:c7bar")
_reg("c7bar:D56", "c7bar:dominated")
_reg("c7bar:D67", "c7bar:dominated")
_reg("c7bar:D12", "c7bar:dominated")
for _t in ("a", "b", "case1", "case2", "case3"):
    _reg(f"ghasc5:{_t}", ROOT, "main:hasC5")
_reg("ghasc5:case1.1", "ghasc5:case1")
_reg("ghasc5:case1.2", "ghasc5:case1")
_reg("ghasc5:case1.2:some-empty", "ghasc5:case1.2")
_reg("ghasc5:case1.2:F1", "ghasc5:case1.2")
_reg("ghasc5:case1.2:primed-b", "ghasc5:case1.2")
_reg("ghasc5:case2:BinW", "ghasc5:case2")
_reg("ghasc5:case2:split", "ghasc5:case2")
_reg("ghasc5:case3:K3free", "ghasc5:case3")
_reg("ghasc5:case3.1", "ghasc5:case3")
_reg("ghasc5:case3.2", "ghasc5:case3")
_reg("ghasc5:case3.2:BinW", "ghasc5:case3.2")
_reg("ghasc5:case3.2:complete", "ghasc5:case3.2")

LEAVES = frozenset(t for t in REGISTRY if not any(t in ps for ps in REGISTRY.values()))


class CaseTrace(list):
    """Ordered list of branch tags taken by one coloring run."""

    def add(self, tag: str) -> None:
        if tag not in REGISTRY:
            raise KeyError(f"unregistered branch tag {tag!r}")
        self.append(tag)


def is_root_to_leaf(trace) -> bool:
    prev = ROOT
    for tag in trace:
        if tag not in REGISTRY or prev not in REGISTRY[tag]:
            return False
        prev = tag
    return prev in LEAVES


class Kind(str, enum.Enum):
    OUT_OF_CLASS = "OutOfClass"
    PARTITION_INCOMPLETE = "PartitionIncomplete"
    STABLE_SET_VIOLATED = "StableSetViolated"
    CASE_EXHAUSTED = "CaseExhausted"
    PRECONDITION = "Precondition"


class SoundnessError(Exception):
    def __init__(self, kind: Kind, message: str, witness=(), trace=None, report=None):
        super().__init__(f"{kind.value}: {message}")
        self.kind = kind
        self.message = message
        self.witness = tuple(witness)
        self.trace = list(trace or [])
        self.report = report  # ClassReport for OutOfClass refusals

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.value,
            "message": self.message,
            "witness": list(self.witness),
            "trace": list(self.trace),
        }
        if self.report is not None:
            out["class_report"] = self.report.to_json()
        return out
