"""Permutations on 0..n-1: composition, cycle notation, orbits, and exact
group order through a deterministic Schreier-Sims stabilizer chain.

A permutation is a tuple ``p`` with ``p[i]`` the image of ``i``.  Products
apply left to right: ``compose(p, q)`` maps ``i`` to ``q[p[i]]``.
"""

from __future__ import annotations

import re
from math import prod
from typing import Iterable, Sequence

Perm = tuple[int, ...]


class PermError(ValueError):
    pass


def check_perm(p: Sequence[int]) -> Perm:
    """Validate that p is a permutation of 0..len(p)-1 and return it as a tuple."""
    t = tuple(p)
    if sorted(t) != list(range(len(t))):
        raise PermError(f"not a permutation of 0..{len(t) - 1}: {t!r}")
    return t


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Sequence[int]) -> bool:
    return all(i == j for i, j in enumerate(p))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def pad(p: Sequence[int], n: int) -> Perm:
    """Extend p to act on 0..n-1, fixing the new points."""
    if len(p) > n:
        raise PermError(f"permutation on {len(p)} points cannot be padded down to {n}")
    return tuple(p) + tuple(range(len(p), n))


def cycles_of(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial cycles of p, each starting at its least element, sorted."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def format_cycles(p: Sequence[int]) -> str:
    """Cycle-notation string for p; the identity formats as "()"."""
    cyc = cycles_of(p)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(\s*((?:\d+[\s,]*)*)\)")


def parse_cycles(s: str, degree: int | None = None) -> Perm:
    """Parse a cycle-notation string like "(0 1)(2 3)" into a permutation.

    The degree defaults to one past the largest point mentioned.
    """
    stripped = s.strip()
    matched = "".join(m.group(0) for m in _CYCLE_RE.finditer(stripped))
    if re.sub(r"\s+", "", matched) != re.sub(r"\s+", "", stripped):
        raise PermError(f"malformed cycle notation: {s!r}")
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        body = m.group(1).strip()
        if not body:
            continue
        points = [int(tok) for tok in re.split(r"[\s,]+", body)]
        if len(set(points)) != len(points):
            raise PermError(f"repeated point in cycle: {m.group(0)!r}")
        cycles.append(points)
    n = max((max(c) + 1 for c in cycles), default=0)
    if degree is not None:
        if n > degree:
            raise PermError(f"cycle mentions point {n - 1} but degree is {degree}")
        n = degree
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if img[a] != a:
                raise PermError(f"point {a} appears in two cycles: {s!r}")
            img[a] = b
    return tuple(img)


def orbits_of(n: int, perms: Iterable[Sequence[int]]) -> list[list[int]]:
    """Orbits of 0..n-1 under the group generated by perms, sorted by minimum."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i, j in enumerate(p):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def closure(degree: int, gens: Iterable[Sequence[int]], cap: int | None = None) -> list[Perm]:
    """All elements of the group generated by gens, by breadth-first products.

    The identity comes first and the enumeration order is deterministic.
    Raises PermError when the closure grows beyond cap.
    """
    gen_list = sorted({check_perm(pad(g, degree)) for g in gens})
    ident = identity_perm(degree)
    elements = [ident]
    seen = {ident}
    head = 0
    while head < len(elements):
        cur = elements[head]
        head += 1
        for g in gen_list:
            nxt = compose(cur, g)
            if nxt not in seen:
                if cap is not None and len(elements) >= cap:
                    raise PermError(f"group closure exceeds cap of {cap} elements")
                seen.add(nxt)
                elements.append(nxt)
    return elements


class StabilizerChain:
    """Base and strong generating set for a permutation group.

    Deterministic: the chain depends only on the generator list.  Orders are
    exact Python integers, so there is no overflow at any group size.
    """

    def __init__(self, degree: int, gens: Iterable[Sequence[int]]):
        self.degree = degree
        self.base: list[int] = []
        self.strong: list[Perm] = []
        self._trans: list[dict[int, Perm]] = []
        for g in sorted({check_perm(pad(g, degree)) for g in gens}):
            if not is_identity(g):
                self._add(g)

    def order(self) -> int:
        return prod(len(t) for t in self._trans)

    def contains(self, p: Sequence[int]) -> bool:
        r, _ = self._sift(check_perm(pad(p, self.degree)), 0)
        return is_identity(r)

    def _sift(self, g: Perm, start: int) -> tuple[Perm, int]:
        for j in range(start, len(self.base)):
            t = g[self.base[j]]
            if t not in self._trans[j]:
                return g, j
            g = compose(g, inverse(self._trans[j][t]))
        return g, len(self.base)

    def _gens_fixing(self, i: int) -> list[Perm]:
        return [g for g in self.strong if all(g[b] == b for b in self.base[:i])]

    def _place(self, r: Perm) -> None:
        self.strong.append(r)
        if all(r[b] == b for b in self.base):
            moved = min(i for i in range(self.degree) if r[i] != i)
            self.base.append(moved)
            self._trans.append({})

    def _rebuild(self, i: int) -> None:
        gens = self._gens_fixing(i)
        b = self.base[i]
        trans = {b: identity_perm(self.degree)}
        queue = [b]
        while queue:
            point = queue.pop(0)
            for g in gens:
                img = g[point]
                if img not in trans:
                    trans[img] = compose(trans[point], g)
                    queue.append(img)
        self._trans[i] = trans

    def _add(self, g: Perm) -> None:
        r, _ = self._sift(g, 0)
        if is_identity(r):
            return
        self._place(r)
        # Rebuild to a global fixpoint: every Schreier generator at every
        # level must sift to the identity through the levels below it.
        while True:
            for i in range(len(self.base)):
                self._rebuild(i)
            found = self._find_missing()
            if found is None:
                return
            self._place(found)

    def _find_missing(self) -> Perm | None:
        for i in range(len(self.base)):
            gens = self._gens_fixing(i)
            trans = self._trans[i]
            for p in sorted(trans):
                u = trans[p]
                for s in gens:
                    rep = trans[s[p]]
                    schreier = compose(compose(u, s), inverse(rep))
                    r, _ = self._sift(schreier, i + 1)
                    if not is_identity(r):
                        return r
        return None


def group_order(degree: int, gens: Iterable[Sequence[int]]) -> int:
    """Exact order of the permutation group generated by gens on 0..degree-1."""
    return StabilizerChain(degree, gens).order()
