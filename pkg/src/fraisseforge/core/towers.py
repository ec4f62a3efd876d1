"""Finite tower prefixes of generic sequences.

A tower stores the distinguished-subcategory bonding arrows between
consecutive stages only; composite bondings are derived on demand and
memoized.  Towers are immutable after construction; the memo cache is a
compute-once detail.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from .arrows import Arrow, ArrowError, CategoryInstance, compose


class Tower:
    def __init__(
        self,
        instance: CategoryInstance,
        objects: Sequence[object],
        steps: Sequence[Arrow],
        log: Optional[list] = None,
    ):
        if len(objects) == 0:
            raise ValueError("a tower needs at least one stage")
        if len(steps) != len(objects) - 1:
            raise ValueError("need exactly one bonding arrow per consecutive pair")
        for n, step in enumerate(steps):
            if not step.lflag:
                raise ValueError(f"bonding {n} is not in the distinguished subcategory")
            if step.dom != objects[n] or step.cod != objects[n + 1]:
                raise ValueError(f"bonding {n} does not match its stages")
        self.instance = instance
        self.objects: Tuple[object, ...] = tuple(objects)
        self.steps: Tuple[Arrow, ...] = tuple(steps)
        self.log = log
        self._memo = {}

    def __len__(self) -> int:
        return len(self.objects)

    @property
    def top(self) -> int:
        return len(self.objects) - 1

    def bonding(self, n: int, m: int) -> Arrow:
        """Composite bonding from stage n to stage m (n <= m)."""
        if not 0 <= n <= m <= self.top:
            raise IndexError(f"bonding({n},{m}) outside tower of height {self.top}")
        if n == m:
            return self.instance.identity(self.objects[n])
        key = (n, m)
        got = self._memo.get(key)
        if got is None:
            got = self.steps[n]
            for k in range(n + 1, m):
                got = compose(self.steps[k], got)
            self._memo[key] = got
        return got

    def level_of(self, obj: object) -> Optional[int]:
        """Lowest stage whose object equals obj, if any."""
        for n, o in enumerate(self.objects):
            if o == obj:
                return n
        return None


def restrict_cofinal(tower: Tower, indices: Sequence[int]) -> Tower:
    """Tower along a strictly increasing list of stage indices."""
    idx = list(indices)
    if not idx:
        raise ValueError("empty index list")
    for a, b in zip(idx, idx[1:]):
        if b <= a:
            raise ValueError("indices must be strictly increasing")
    if idx[0] < 0 or idx[-1] > tower.top:
        raise IndexError("indices outside the stored prefix")
    objects = [tower.objects[i] for i in idx]
    steps = [tower.bonding(a, b) for a, b in zip(idx, idx[1:])]
    return Tower(tower.instance, objects, steps)


def check_coherence(tower: Tower) -> bool:
    """Exact u_n^m = u_k^m . u_n^k for all n <= k <= m."""
    for n in range(len(tower)):
        for k in range(n, len(tower)):
            for m in range(k, len(tower)):
                lhs = tower.bonding(n, m)
                rhs = compose(tower.bonding(k, m), tower.bonding(n, k))
                if lhs.payload != rhs.payload:
                    return False
    return True


def constant_tower(instance: CategoryInstance, obj: object, height: int) -> Tower:
    """Tower with one object repeated and identity bondings."""
    objects = [obj] * (height + 1)
    steps = [instance.identity(obj) for _ in range(height)]
    return Tower(instance, objects, steps)
