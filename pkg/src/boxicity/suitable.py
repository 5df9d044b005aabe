"""Simply 3-suitable permutation families.

A family of permutations of ``[n]`` is simply 3-suitable when no element
lies strictly between two others in every permutation of the family. The
minimum family size is ``ceil(log2 log2 n) + 1``.

Permutations here are 1-based: ``order[i - 1]`` is the element at position
``i`` and ``inv(x)`` is the position of element ``x``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .errors import BoxicityError, CapExceeded
from .graphs import complete_graph, full_subdivision
from .intervals import BoxRep, verify_box_representation

# above this family size the orthant table of the fast check gets too large
_KERNEL_MAX_P = 8  # orthant codes are stored as uint8


def ceil_log2_log2(n: int) -> int:
    """``ceil(log2(log2(n)))`` for ``n >= 2``, computed exactly."""
    if n < 2:
        raise BoxicityError("log2 log2 n needs n >= 2")
    i = 0
    while 2 ** (2**i) < n:
        i += 1
    return i


def suitable_size(n: int) -> int:
    """Minimum size of a simply 3-suitable family for ``[n]``."""
    return 1 if n <= 2 else ceil_log2_log2(n) + 1


@dataclass(frozen=True)
class Permutation:
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(x) for x in self.order)
        if sorted(order) != list(range(1, len(order) + 1)):
            raise BoxicityError(f"not a permutation of [{len(order)}]: {order[:10]}")
        object.__setattr__(self, "order", order)

    @classmethod
    def from_inverse(cls, positions: Sequence[int]) -> Permutation:
        """Build from ``positions[x - 1] = inv(x)``."""
        order = [0] * len(positions)
        for x, p in enumerate(positions, start=1):
            order[p - 1] = x
        return cls(tuple(order))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def positions(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, x in enumerate(self.order, start=1):
            pos[x - 1] = i
        return tuple(pos)

    def inv(self, x: int) -> int:
        return self.positions[x - 1]

    def __call__(self, i: int) -> int:
        return self.order[i - 1]

    def restrict(self, n1: int) -> Permutation:
        return Permutation(tuple(x for x in self.order if x <= n1))


@dataclass(frozen=True)
class PermutationFamily:
    n: int
    perms: tuple[Permutation, ...]

    def __post_init__(self):
        perms = tuple(self.perms)
        if any(p.n != self.n for p in perms):
            raise BoxicityError(f"all permutations must be over [{self.n}]")
        object.__setattr__(self, "perms", perms)

    def __len__(self) -> int:
        return len(self.perms)

    def position_matrix(self) -> np.ndarray:
        """``(n, p)`` array of 0-based positions, row per element."""
        if not self.perms:
            return np.zeros((self.n, 0), dtype=np.int32)
        return np.array([p.positions for p in self.perms], dtype=np.int32).T.copy() - 1

    def restrict(self, n1: int) -> PermutationFamily:
        return PermutationFamily(n1, tuple(p.restrict(n1) for p in self.perms))


class SuitabilityCheck(NamedTuple):
    ok: bool
    witness: tuple[int, int, int] | None  # (x, s, t): x between s and t everywhere

    def __bool__(self) -> bool:
        return self.ok


def beta(s: int, t: int, sigma: Permutation) -> frozenset[int]:
    """Elements strictly between ``s`` and ``t`` in the order of ``sigma``."""
    n = sigma.n
    if not (1 <= s <= n and 1 <= t <= n):
        raise BoxicityError(f"elements must lie in [1, {n}]")
    if s == t:
        raise BoxicityError("beta is undefined for s == t")
    lo, hi = sorted((sigma.inv(s), sigma.inv(t)))
    return frozenset(sigma(i) for i in range(lo + 1, hi))


def _first_betweenness_impl(pos_t):
    # For every x, classify each other element s by the orthant of its
    # position vector relative to x. x lies between s and t in all
    # permutations exactly when s and t sit in opposite orthants.
    p, n = pos_t.shape
    full = (1 << p) - 1
    codes = np.empty(n, np.uint8)
    occupied = np.empty(1 << p, np.uint8)
    for x in range(n):
        # branch-free code pass, vectorized by the compiler
        codes[:] = 0
        for i in range(p):
            px = pos_t[i, x]
            row = pos_t[i]
            bit = np.uint8(1 << i)
            for s in range(n):
                codes[s] |= bit if row[s] > px else np.uint8(0)
        occupied[:] = 0
        for s in range(n):
            occupied[codes[s]] = 1
        hit = False
        for c in range(1, full):
            if occupied[c] and occupied[full ^ c]:
                hit = True
                break
        if not hit and occupied[full]:
            # code 0 always holds x itself; look for another element there
            zeros = 0
            for s in range(n):
                zeros += codes[s] == 0
            hit = zeros > 1
        if not hit:
            continue
        # recover the witness pair for this x
        seen = np.full(1 << p, -1, np.int64)
        for s in range(n):
            if s == x:
                continue
            other = seen[full ^ codes[s]]
            if other >= 0:
                return x, other, s
            seen[codes[s]] = s
    return -1, -1, -1


@cache
def _kernel():
    # numba is imported on first use so that light commands start fast
    import numba

    return numba.njit(cache=True)(_first_betweenness_impl)


def _first_betweenness(pos):
    dtype = np.uint16 if pos.shape[0] <= 1 << 16 else np.int32
    pos_t = np.ascontiguousarray(np.asarray(pos, dtype=dtype).T)
    return _kernel()(pos_t)


def _first_betweenness_py(family: PermutationFamily) -> tuple[int, int, int] | None:
    for x in range(1, family.n + 1):
        for s in range(1, family.n + 1):
            for t in range(s + 1, family.n + 1):
                if x in (s, t):
                    continue
                if all(min(p.inv(s), p.inv(t)) < p.inv(x) < max(p.inv(s), p.inv(t)) for p in family.perms):
                    return x, s, t
    return None


def is_simply_3_suitable(family: PermutationFamily) -> SuitabilityCheck:
    """Check every triple; on failure return the witness with smallest ``x``."""
    if family.n < 3:
        return SuitabilityCheck(True, None)
    if not family.perms:
        return SuitabilityCheck(False, (2, 1, 3))
    if len(family) > _KERNEL_MAX_P:
        w = _first_betweenness_py(family)
        return SuitabilityCheck(w is None, w)
    x, s, t = _first_betweenness(family.position_matrix())
    if x < 0:
        return SuitabilityCheck(True, None)
    s, t = sorted((int(s) + 1, int(t) + 1))
    return SuitabilityCheck(False, (int(x) + 1, s, t))


def _double_power_family(level: int) -> list[np.ndarray]:
    """0-based inverse arrays of the family for ``[2**(2**level)]``."""
    if level == 0:
        return [np.array([0, 1], dtype=np.int64)]
    etas = _double_power_family(level - 1)
    n1 = len(etas[0])
    a = np.arange(n1 * n1, dtype=np.int64)
    block, within = a // n1, a % n1
    sigmas = [eta[block] * n1 + eta[within] for eta in etas]
    last = etas[-1]
    # blocks in reversed order of the last member, each block kept in order
    sigmas.append((n1 - 1 - last[block]) * n1 + last[within])
    return sigmas


def build_simply_3_suitable(n: int) -> PermutationFamily:
    """Recursive block construction at the next ``2**(2**i)``, restricted to ``[n]``."""
    if n < 1:
        raise BoxicityError("n must be at least 1")
    if n == 1:
        return PermutationFamily(1, (Permutation.identity(1),))
    level = ceil_log2_log2(n)
    perms = []
    for inv in _double_power_family(level):
        # restriction to [n]: keep elements 1..n in their relative order
        order = np.argsort(inv[:n], kind="stable") + 1
        perms.append(Permutation(tuple(order.tolist())))
    return PermutationFamily(n, tuple(perms))


def _betweenness_mask(perm: tuple[int, ...], triples: list[tuple[int, int, int]]) -> int:
    pos = {x: i for i, x in enumerate(perm)}
    mask = 0
    for bit, (x, s, t) in enumerate(triples):
        ps, pt, px = pos[s], pos[t], pos[x]
        if min(ps, pt) < px < max(ps, pt):
            mask |= 1 << bit
    return mask


def min_simply_3_suitable_size(n: int, cap: int = 4, max_n: int = 6) -> int:
    """Exact minimum family size by exhaustive search.

    The first permutation is fixed to the identity: relabeling the ground set
    by any member maps suitable families to suitable families.
    """
    if not 2 <= n <= max_n:
        raise CapExceeded(f"exhaustive search supports 2 <= n <= {max_n}, got {n}")
    triples = [(x, s, t) for x in range(1, n + 1) for s, t in itertools.combinations(range(1, n + 1), 2) if x not in (s, t)]
    perms = list(itertools.permutations(range(1, n + 1)))
    masks = sorted({_betweenness_mask(p, triples) for p in perms[1:]})
    start = _betweenness_mask(perms[0], triples)
    if start == 0:
        return 1
    for size in range(2, cap + 1):
        for combo in itertools.combinations(masks, size - 1):
            acc = start
            for m in combo:
                acc &= m
                if not acc:
                    break
            if not acc:
                return size
    raise CapExceeded(f"no simply 3-suitable family of size <= {cap} for n={n}")


def extract_family_from_boxrep(rep: BoxRep, n: int) -> tuple[PermutationFamily, SuitabilityCheck]:
    """Read two permutations per dimension off a rep of the subdivided ``K_n``.

    Vertex ``p - 1`` is the original vertex ``p``. Per dimension, one
    permutation orders these vertices by left endpoint and one by right
    endpoint. Ties among them are rejected.
    """
    target, _ = full_subdivision(complete_graph(n))
    report = verify_box_representation(target, rep)
    if not report.valid:
        raise BoxicityError("representation is not valid for the subdivided complete graph")
    perms = []
    for i, dim in enumerate(rep.dims):
        ivs = dim.intervals[:n]
        for side, name in ((0, "left"), (1, "right")):
            ends = [iv[side] for iv in ivs]
            if len(set(ends)) != n:
                raise BoxicityError(f"tied {name} endpoints among original vertices in dimension {i}")
            order = sorted(range(1, n + 1), key=lambda p: ends[p - 1])
            perms.append(Permutation(tuple(order)))
    family = PermutationFamily(n, tuple(perms))
    return family, is_simply_3_suitable(family)
