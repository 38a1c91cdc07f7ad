"""Exhaustive enumeration of groups of small order, up to isomorphism.

Groups of order n are enumerated as Cayley tables over {0..n-1} with 0 as
the identity, filled row-major by backtracking with:

  * Latin-square row/column masks,
  * associativity propagation: each placed product a*b = c triggers the
    forced consequences (a*b)*x = a*(b*x) and x*(a*b) = (x*a)*b in both
    directions, plus last-cell completion of rows and columns,
  * a first-occurrence ordering constraint on row 1: scanning that row left
    to right, a value may exceed everything seen so far by at most one.
    Every isomorphism class has a labeling of this shape (relabel by order
    of first appearance), so the constraint prunes without losing classes.

The constraint is not a full canonical form, so survivors are deduplicated
by an invariant fingerprint (element-order profile, class sizes) followed by
exact isomorphism search.  Every emitted table is re-verified against all
n^3 associativity triples; searches that hit the node budget raise rather
than return partial results, so an exhaustive answer is always exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidParam, SelfCheckFailed
from .groups import GroupRealization

__all__ = [
    "CayleyTable",
    "DEFAULT_ORDER_CAP",
    "DEFAULT_NODE_BUDGET",
    "enumerate_groups",
    "table_to_realization",
    "is_isomorphic",
]

DEFAULT_ORDER_CAP = 16
DEFAULT_NODE_BUDGET = 10**9


@dataclass(frozen=True)
class CayleyTable:
    n: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, t = self.n, self.table
        if len(t) != n or any(len(row) != n for row in t):
            raise InvalidParam("table shape does not match order")
        if t[0] != tuple(range(n)) or any(t[r][0] != r for r in range(n)):
            raise InvalidParam("element 0 is not an identity")
        full = set(range(n))
        for r in range(n):
            if set(t[r]) != full or {t[i][r] for i in range(n)} != full:
                raise InvalidParam("table is not a Latin square")

    def is_associative(self) -> bool:
        t = self.table
        rng = range(self.n)
        return all(
            t[t[a][b]][c] == t[a][t[b][c]] for a in rng for b in rng for c in rng
        )

    def element_orders(self) -> tuple[int, ...]:
        out = []
        for x in range(self.n):
            k, y = 1, x
            while y != 0:
                y = self.table[y][x]
                k += 1
            out.append(k)
        return tuple(out)


def table_to_realization(t: CayleyTable) -> GroupRealization:
    inverse = [t.table[r].index(0) for r in range(t.n)]
    return GroupRealization(
        identity=0,
        multiply=lambda a, b: t.table[a][b],
        inverse=lambda a: inverse[a],
        generators=list(range(1, t.n)) or [0],
        descriptor=f"table:{t.n}",
        expected_order=t.n,
    )


# ------------------------------------------------------------------ search


class _Search:
    def __init__(self, n: int, budget: int):
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.table = [[-1] * n for _ in range(n)]
        self.table[0] = list(range(n))
        for r in range(n):
            self.table[r][0] = r
        self.rowmask = [(1 << n) - 2 if r == 0 else 1 << r for r in range(n)]
        self.colmask = [(1 << n) - 2 if c == 0 else 1 << c for c in range(n)]
        self.rowmask[0] = self.colmask[0] = (1 << n) - 1
        self.rowcount = [n if r == 0 else 1 for r in range(n)]
        self.colcount = [n if c == 0 else 1 for c in range(n)]
        self.trail: list[tuple[int, int]] = []
        self.found: list[CayleyTable] = []

    # -- assignment with propagation; returns False on contradiction

    def assign(self, r: int, c: int, v: int, queue) -> bool:
        cur = self.table[r][c]
        if cur != -1:
            return cur == v
        bit = 1 << v
        if self.rowmask[r] & bit or self.colmask[c] & bit:
            return False
        self.table[r][c] = v
        self.rowmask[r] |= bit
        self.colmask[c] |= bit
        self.rowcount[r] += 1
        self.colcount[c] += 1
        self.trail.append((r, c))
        queue.append((r, c))
        return True

    def undo_to(self, mark: int):
        while len(self.trail) > mark:
            r, c = self.trail.pop()
            v = self.table[r][c]
            self.table[r][c] = -1
            bit = ~(1 << v)
            self.rowmask[r] &= bit
            self.colmask[c] &= bit
            self.rowcount[r] -= 1
            self.colcount[c] -= 1

    def propagate(self, queue) -> bool:
        t = self.table
        n = self.n
        while queue:
            a, b = queue.pop()
            c = t[a][b]
            for x in range(1, n):
                # (a*b)*x = a*(b*x)
                y = t[b][x]
                if y != -1:
                    z = t[a][y]
                    w = t[c][x]
                    if z != -1:
                        if not self.assign(c, x, z, queue):
                            return False
                    elif w != -1:
                        if not self.assign(a, y, w, queue):
                            return False
                # x*(a*b) = (x*a)*b
                y = t[x][a]
                if y != -1:
                    z = t[y][b]
                    w = t[x][c]
                    if z != -1:
                        if not self.assign(x, c, z, queue):
                            return False
                    elif w != -1:
                        if not self.assign(y, b, w, queue):
                            return False
            if not self.complete_line(a, b, queue):
                return False
        return True

    def complete_line(self, r: int, c: int, queue) -> bool:
        """Quasigroup cancellation: one hole left in a row or column."""
        n = self.n
        full = (1 << n) - 1
        if self.rowcount[r] == n - 1:
            col = self.table[r].index(-1)
            v = (full ^ self.rowmask[r]).bit_length() - 1
            if not self.assign(r, col, v, queue):
                return False
        if self.colcount[c] == n - 1:
            row = next(i for i in range(n) if self.table[i][c] == -1)
            v = (full ^ self.colmask[c]).bit_length() - 1
            if not self.assign(row, c, v, queue):
                return False
        return True

    # -- depth-first fill, row-major

    def next_cell(self):
        for r in range(1, self.n):
            if self.rowcount[r] < self.n:
                row = self.table[r]
                for c in range(1, self.n):
                    if row[c] == -1:
                        return r, c
        return None

    def run(self):
        cell = self.next_cell()
        if cell is None:
            table = CayleyTable(
                self.n, tuple(tuple(row) for row in self.table)
            )
            if not table.is_associative():
                raise SelfCheckFailed("search emitted a non-associative table")
            self.found.append(table)
            return
        r, c = cell
        if r == 1:
            seen = max(
                (v for v in self.table[1][1:c] if v != -1), default=1
            )
            bound = max(seen, c) + 1
        else:
            bound = self.n - 1
        for v in range(min(bound, self.n - 1) + 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(
                    f"enumeration of order {self.n} exceeded {self.budget} nodes"
                )
            mark = len(self.trail)
            queue: list[tuple[int, int]] = []
            if self.assign(r, c, v, queue) and self.propagate(queue):
                self.run()
            self.undo_to(mark)


# ------------------------------------------------------------- isomorphism


def _generator_chain(t: CayleyTable) -> list[int]:
    """Greedy chain of generators: least element outside the closure so far."""
    closed = {0}
    gens = []
    while len(closed) < t.n:
        g = min(set(range(t.n)) - closed)
        gens.append(g)
        frontier = list(closed | {g})
        closed.add(g)
        while frontier:
            x = frontier.pop()
            for y in list(closed):
                for z in (t.table[x][y], t.table[y][x]):
                    if z not in closed:
                        closed.add(z)
                        frontier.append(z)
    return gens


def _close_map(t1: CayleyTable, t2: CayleyTable, base: dict) -> dict | None:
    """Extend base to the generated subgroup; None on any conflict."""
    phi = dict(base)
    used = set(phi.values())
    if len(used) != len(phi):
        return None
    changed = True
    while changed:
        changed = False
        for x in list(phi):
            for y in list(phi):
                z1 = t1.table[x][y]
                z2 = t2.table[phi[x]][phi[y]]
                if z1 in phi:
                    if phi[z1] != z2:
                        return None
                elif z2 in used:
                    return None
                else:
                    phi[z1] = z2
                    used.add(z2)
                    changed = True
    return phi


def is_isomorphic(t1: CayleyTable, t2: CayleyTable) -> bool:
    if t1.n != t2.n:
        return False
    orders1 = t1.element_orders()
    orders2 = t2.element_orders()
    if sorted(orders1) != sorted(orders2):
        return False
    gens = _generator_chain(t1)

    def extend(phi: dict) -> bool:
        missing = [g for g in gens if g not in phi]
        if not missing:
            return len(phi) == t1.n
        g = missing[0]
        for img in range(1, t2.n):
            if img in phi.values() or orders2[img] != orders1[g]:
                continue
            nxt = _close_map(t1, t2, {**phi, g: img})
            if nxt is not None and extend(nxt):
                return True
        return False

    return extend({0: 0})


# -------------------------------------------------------------- enumeration


def _fingerprint(t: CayleyTable):
    from .degrees import conjugacy_classes

    sizes = conjugacy_classes(table_to_realization(t)).sizes
    return (tuple(sorted(t.element_orders())), tuple(sorted(sizes)))


def enumerate_groups(
    n: int,
    budget: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_ORDER_CAP,
) -> list[CayleyTable]:
    """One lex-least Cayley table per isomorphism class of groups of order n."""
    if n < 1:
        raise InvalidParam("order must be >= 1")
    if n > cap:
        raise BudgetExceeded(
            f"order {n} beyond enumeration cap {cap}; no partial answer given"
        )
    search = _Search(n, budget)
    search.run()
    kept: list[CayleyTable] = []
    prints: list = []
    for t in search.found:
        fp = _fingerprint(t)
        dup = any(
            fp == fp2 and is_isomorphic(t, t2) for t2, fp2 in zip(kept, prints)
        )
        if not dup:
            kept.append(t)
            prints.append(fp)
    return kept
