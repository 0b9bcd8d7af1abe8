"""One entry point over every supported (class, mode) pair."""

from __future__ import annotations

from collections.abc import Iterator

from proxenum import cograph, p3free, split, threshold
from proxenum import trivially_perfect as tp
from proxenum.errors import ArgumentError, CapabilityError
from proxenum.graph import Graph, complement
from proxenum.proximity import EnumerationRun, Solution
from proxenum.recognition import CLASSES

MODES = ("induced", "deletion", "completion")

_DIRECT = {
    ("split", "completion"): split.enumerate_min_split_completions,
    ("split", "deletion"): split.enumerate_max_split_deletions,
    ("cograph", "induced"): cograph.enumerate_max_induced_subcographs,
    ("cograph", "deletion"): cograph.enumerate_min_cograph_deletions,
    ("p3free", "deletion"): p3free.enumerate_min_p3free_deletions,
    ("p3free", "completion"): p3free.enumerate_min_p3free_completions,
    ("threshold", "deletion"): threshold.enumerate_min_threshold_deletions,
    ("tp", "deletion"): tp.enumerate_min_tp_deletions,
}

# classes closed under complementation
SELF_COMPLEMENTARY = ("split", "cograph", "threshold")

SUPPORTED = {
    "split": ("completion", "deletion"),
    "cograph": ("induced", "deletion", "completion"),
    "p3free": ("deletion", "completion"),
    "threshold": ("deletion", "completion"),
    "tp": ("deletion",),
}


def check_supported(cls: str, mode: str) -> None:
    """Raise unless ``(cls, mode)`` has an enumerator."""
    if cls not in CLASSES:
        raise ArgumentError(f"unknown class {cls!r}; expected one of {CLASSES}")
    if mode not in MODES:
        raise ArgumentError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode not in SUPPORTED[cls]:
        if cls == "tp" and mode == "completion":
            raise CapabilityError("minimal trivially perfect completions: no enumeration algorithm is known (open problem)")
        raise CapabilityError(f"{cls} {mode} is not supported")


def _complement_pairs(n: int, edges) -> frozenset:
    present = set(edges)
    return frozenset((u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present)


def dual_enumerate(g: Graph, cls: str, mode: str) -> EnumerationRun:
    """Solve ``mode`` on g through the opposite mode on the complement.

    Valid for classes closed under complementation: F is a maximal cls
    edge-subgraph of g iff the complement of F is a minimal cls completion
    of the complement of g.
    """
    if cls not in SELF_COMPLEMENTARY:
        raise CapabilityError(f"{cls} is not closed under complementation; no dual available")
    if mode not in ("deletion", "completion"):
        raise CapabilityError("duality applies to deletion and completion only")
    other = "completion" if mode == "deletion" else "deletion"
    co = complement(g)
    if (cls, other) not in _DIRECT:
        raise CapabilityError(f"no direct {cls} {other} enumerator to dualise")

    def source(run: EnumerationRun) -> Iterator[Solution]:
        inner = _DIRECT[(cls, other)](co)
        inner.tick = run.tick
        for sol in inner:
            yield Solution.of_edges(_complement_pairs(g.n, sol.payload))

    return EnumerationRun(g, source)


def enumerate_solutions(g: Graph, cls: str, mode: str) -> EnumerationRun:
    """Stream every minimal completion / maximal (induced or edge) subgraph of ``g`` in ``cls``.

    Completion payloads are full edge sets E(g) ∪ F.
    """
    check_supported(cls, mode)
    if (cls, mode) in _DIRECT:
        return _DIRECT[(cls, mode)](g)
    return dual_enumerate(g, cls, mode)
