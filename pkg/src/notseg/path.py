"""The full threshold-indexed solution path via incremental tree updates.

The detection output is a step function of the threshold: it changes only
at finitely many values.  Rather than re-running detection per threshold,
the detection at the current threshold is kept as a binary tree of
segment splits; raising the threshold to the smallest contrast stored in
any node invalidates exactly the branches rooted at nodes that no longer
pass, and only those branches are rebuilt.  Each rebuilt tree is exactly
what fixed-threshold detection would produce, so the emitted path is
exhaustive: looking up any threshold in it reproduces ``not_detect``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ChangePointSet, Scenario
from .detector import ProfileCache
from .sampler import IntervalEnsemble

__all__ = ["SegTreeNode", "SolutionPath", "solution_path"]


@dataclass
class SegTreeNode:
    """One detected split: segment [s, e], split point b, and the max
    contrast c of the interval that selected it.  The left child covers
    [s, b], the right child [b+1, e]."""

    s: int
    e: int
    b: int
    c: float
    left: "SegTreeNode | None" = None
    right: "SegTreeNode | None" = None

    def __post_init__(self):
        if not (self.s <= self.b < self.e):
            raise ValueError(f"split {self.b} outside segment [{self.s}, {self.e})")


@dataclass(frozen=True)
class SolutionPath:
    """All distinct detection outputs, indexed by threshold.

    ``models[i]`` is the detection output for every threshold in
    [thresholds[i], thresholds[i+1]); beyond ``final_threshold`` the
    output is empty.  Thresholds are strictly increasing, consecutive
    models always differ, and thresholds[0] == 0 whenever the path is
    nonempty.
    """

    thresholds: tuple[float, ...]
    models: tuple[ChangePointSet, ...]
    final_threshold: float
    T: int

    def __len__(self) -> int:
        return len(self.thresholds)

    def model_at(self, zeta: float) -> ChangePointSet:
        """The detection output at threshold ``zeta``."""
        if not (zeta >= 0):
            raise ValueError("threshold must be nonnegative")
        if zeta >= self.final_threshold or not self.thresholds:
            return ChangePointSet((), self.T)
        i = 0
        for j, z in enumerate(self.thresholds):
            if z <= zeta:
                i = j
            else:
                break
        return self.models[i]


def _build(cache: ProfileCache, s: int, e: int, zeta: float) -> SegTreeNode | None:
    """Detection on [s, e] at threshold zeta, materialised as a tree."""
    hit = cache.narrowest_over(s, e, zeta)
    if hit is None:
        return None
    root = SegTreeNode(s, e, *hit)
    stack = [root]
    while stack:
        node = stack.pop()
        if node.b - node.s >= 1:
            got = cache.narrowest_over(node.s, node.b, zeta)
            if got is not None:
                node.left = SegTreeNode(node.s, node.b, *got)
                stack.append(node.left)
        if node.e - (node.b + 1) >= 1:
            got = cache.narrowest_over(node.b + 1, node.e, zeta)
            if got is not None:
                node.right = SegTreeNode(node.b + 1, node.e, *got)
                stack.append(node.right)
    return root


def _update(cache: ProfileCache, root: SegTreeNode, zeta: float) -> SegTreeNode | None:
    """Raise the threshold: rebuild every branch whose root no longer passes.

    A surviving node still wins its segment at the higher threshold — its
    candidate pool only shrank and it remains in it — so only failing
    branches need recomputation.
    """
    if root.c <= zeta:
        return _build(cache, root.s, root.e, zeta)
    stack = [root]
    while stack:
        node = stack.pop()
        for slot in ("left", "right"):
            child = getattr(node, slot)
            if child is None:
                continue
            if child.c <= zeta:
                setattr(node, slot, _build(cache, child.s, child.e, zeta))
            else:
                stack.append(child)
    return root


def _nodes(root: SegTreeNode) -> list[SegTreeNode]:
    out = []
    stack = [root]
    while stack:
        node = stack.pop()
        out.append(node)
        if node.left is not None:
            stack.append(node.left)
        if node.right is not None:
            stack.append(node.right)
    return out


def solution_path(y, ensemble: IntervalEnsemble, scenario: Scenario | None = None,
                  eps_var: float | None = None,
                  cache: ProfileCache | None = None) -> SolutionPath:
    """Compute every distinct detection output over all thresholds >= 0.

    Parameters
    ----------
    y : TimeSeries or array-like
        The observations.
    ensemble : IntervalEnsemble
        Candidate intervals; its scenario is used unless ``scenario``
        disagrees, which is an error.
    cache : ProfileCache, optional
        Reuse precomputed profiles (e.g. shared with ``not_detect``).

    Returns
    -------
    SolutionPath
        Strictly increasing thresholds with their models.  A series whose
        every profile maximum is zero yields an empty path.
    """
    if scenario is not None and scenario is not ensemble.scenario:
        raise ValueError(f"ensemble was drawn for {ensemble.scenario.name}, "
                         f"not {scenario.name}")
    if cache is None:
        cache = ProfileCache(y, ensemble, eps_var)

    thresholds: list[float] = []
    models: list[ChangePointSet] = []
    zeta = 0.0
    root = _build(cache, 1, cache.T, zeta)
    last: tuple[int, ...] | None = None
    while root is not None:
        nodes = _nodes(root)
        taus = tuple(sorted(node.b for node in nodes))
        if taus != last:
            thresholds.append(zeta)
            models.append(ChangePointSet(taus, cache.T))
            last = taus
        zeta = min(node.c for node in nodes)
        root = _update(cache, root, zeta)
    return SolutionPath(tuple(thresholds), tuple(models),
                        final_threshold=cache.max_contrast, T=cache.T)
