"""Set partitions of [k] u [k'] and the diagram monoid.

A vertex is an int: +i for the top vertex i, -i for the bottom vertex i'.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering


def _vkey(v: int, k: int) -> int:
    # Top 1 < ... < Top k < Bot 1 < ... < Bot k
    return v if v > 0 else k - v


class _DSU:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, a):
        p = self.p
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[rb] = ra


@total_ordering
@dataclass(frozen=True)
class SetPartitionDiagram:
    k: int
    blocks: tuple

    def __post_init__(self):
        k = self.k
        if k < 0:
            raise ValueError("k must be non-negative")
        canon = []
        seen = set()
        for b in self.blocks:
            b = tuple(sorted(set(b), key=lambda v: _vkey(v, k)))
            if not b:
                raise ValueError("empty block")
            for v in b:
                if v == 0 or abs(v) > k:
                    raise ValueError(f"vertex {v} out of range for k={k}")
                if v in seen:
                    raise ValueError(f"vertex {v} repeated")
                seen.add(v)
            canon.append(b)
        if len(seen) != 2 * k:
            raise ValueError("blocks do not cover all vertices")
        canon.sort(key=lambda b: _vkey(b[0], k))
        object.__setattr__(self, "blocks", tuple(canon))

    def _cmp_key(self):
        return (self.k, tuple(tuple(_vkey(v, self.k) for v in b) for b in self.blocks))

    def __lt__(self, other):
        return self._cmp_key() < other._cmp_key()

    def block_of(self):
        out = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return out

    def is_odd_member(self) -> bool:
        """Membership in Pi_{2k-1}: k and k' share a block."""
        if self.k == 0:
            return False
        bo = self.block_of()
        return bo[self.k] == bo[-self.k]

    def to_json(self) -> dict:
        return {"k": self.k, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data) -> "SetPartitionDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["k"]), tuple(tuple(int(v) for v in b) for b in data["blocks"]))

    def __repr__(self):
        def name(v):
            return str(v) if v > 0 else f"{-v}'"
        inner = ",".join("{" + ",".join(name(v) for v in b) + "}" for b in self.blocks)
        return "{" + inner + "}"


Diagram = SetPartitionDiagram


@dataclass(frozen=True)
class ComposeResult:
    diagram: SetPartitionDiagram
    middle_components: int


def identity(k: int) -> SetPartitionDiagram:
    return Diagram(k, tuple((i, -i) for i in range(1, k + 1)))


def compose(a: SetPartitionDiagram, b: SetPartitionDiagram) -> ComposeResult:
    """Stack a on top of b; count the components trapped in the middle row."""
    if a.k != b.k:
        raise ValueError(f"size mismatch: {a.k} vs {b.k}")
    k = a.k
    # nodes: a-top i -> i-1, middle i -> k+i-1, b-bottom i -> 2k+i-1
    dsu = _DSU(3 * k)

    def node_a(v):
        return v - 1 if v > 0 else k + (-v) - 1

    def node_b(v):
        return k + v - 1 if v > 0 else 2 * k + (-v) - 1

    for blk in a.blocks:
        for v in blk[1:]:
            dsu.union(node_a(blk[0]), node_a(v))
    for blk in b.blocks:
        for v in blk[1:]:
            dsu.union(node_b(blk[0]), node_b(v))
    groups = {}
    for i in range(3 * k):
        groups.setdefault(dsu.find(i), []).append(i)
    blocks = []
    middle = 0
    for nodes in groups.values():
        verts = []
        for n in nodes:
            if n < k:
                verts.append(n + 1)
            elif n >= 2 * k:
                verts.append(-(n - 2 * k + 1))
        if verts:
            blocks.append(tuple(verts))
        else:
            middle += 1
    return ComposeResult(Diagram(k, tuple(blocks)), middle)


def flip(a: SetPartitionDiagram) -> SetPartitionDiagram:
    return Diagram(a.k, tuple(tuple(-v for v in b) for b in a.blocks))


def embed(a: SetPartitionDiagram, k: int) -> SetPartitionDiagram:
    if a.k > k:
        raise ValueError(f"cannot embed size {a.k} into {k}")
    return Diagram(k, a.blocks + tuple((i, -i) for i in range(a.k + 1, k + 1)))


def s(i: int, k: int) -> SetPartitionDiagram:
    if not 1 <= i <= k - 1:
        raise IndexError(f"s_{i} needs 1 <= i <= k-1 (k={k})")
    blocks = [(j, -j) for j in range(1, k + 1) if j not in (i, i + 1)]
    blocks += [(i, -(i + 1)), (i + 1, -i)]
    return Diagram(k, tuple(blocks))


def e_odd(j: int, k: int) -> SetPartitionDiagram:
    """e_{2j-1}: top j and bottom j' isolated."""
    if not 1 <= j <= k:
        raise IndexError(f"e_(2j-1) needs 1 <= j <= k (j={j}, k={k})")
    blocks = [(m, -m) for m in range(1, k + 1) if m != j] + [(j,), (-j,)]
    return Diagram(k, tuple(blocks))


def e_even(i: int, k: int) -> SetPartitionDiagram:
    """e_{2i}: one block {i, i+1, i', (i+1)'}."""
    if not 1 <= i <= k - 1:
        raise IndexError(f"e_(2i) needs 1 <= i <= k-1 (i={i}, k={k})")
    blocks = [(m, -m) for m in range(1, k + 1) if m not in (i, i + 1)]
    blocks.append((i, i + 1, -i, -(i + 1)))
    return Diagram(k, tuple(blocks))


def e(j: int, k: int) -> SetPartitionDiagram:
    """e_j in the single-index numbering (odd j -> e_odd, even j -> e_even)."""
    return e_odd((j + 1) // 2, k) if j % 2 else e_even(j // 2, k)


def generator(kind: str, index: int, k: int) -> SetPartitionDiagram:
    kind = kind.lower()
    if kind in ("s",):
        return s(index, k)
    if kind in ("eodd", "e_odd"):
        return e_odd(index, k)
    if kind in ("eeven", "e_even"):
        return e_even(index, k)
    raise ValueError(f"unknown generator kind {kind!r}")


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def enumerate_diagrams(r: int) -> list:
    """All of Pi_r. Odd r = 2k-1 is realised at size k with k, k' joined."""
    if r < 0:
        raise ValueError("r must be non-negative")
    k = (r + 1) // 2
    verts = list(range(1, k + 1)) + [-i for i in range(1, k + 1)]
    out = []
    if r % 2 == 0:
        for p in _set_partitions(verts):
            out.append(Diagram(k, tuple(tuple(b) for b in p)))
    else:
        # glue k and k' into one super-vertex
        base = [v for v in verts if abs(v) != k] + ["kk"]
        for p in _set_partitions(base):
            blocks = []
            for b in p:
                bb = []
                for v in b:
                    bb.extend([k, -k] if v == "kk" else [v])
                blocks.append(tuple(bb))
            out.append(Diagram(k, tuple(blocks)))
    return sorted(out)


def propagating_number(a: SetPartitionDiagram) -> int:
    return sum(1 for b in a.blocks if any(v > 0 for v in b) and any(v < 0 for v in b))


_FACTOR_CACHE = {}


def factorize(a: SetPartitionDiagram):
    """A generator word w and m >= 0 with w = z^m * a in A_2k(z).

    Tokens are "s{i}" and "e{j}". Found by breadth-first search over the
    monoid, so words are shortest possible.
    """
    k = a.k
    if k not in _FACTOR_CACHE:
        gens = [(f"s{i}", s(i, k)) for i in range(1, k)]
        gens += [(f"e{j}", e(j, k)) for j in range(1, 2 * k)]
        start = identity(k)
        table = {start: ((), 0)}
        frontier = [start]
        while frontier:
            nxt = []
            for d in frontier:
                word, m = table[d]
                for tok, g in gens:
                    r = compose(d, g)
                    if r.diagram not in table:
                        table[r.diagram] = (word + (tok,), m + r.middle_components)
                        nxt.append(r.diagram)
            frontier = nxt
        _FACTOR_CACHE[k] = table
    return _FACTOR_CACHE[k][a]
