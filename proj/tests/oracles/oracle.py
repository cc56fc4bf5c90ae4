#!/usr/bin/env python3
"""Reference values for the C++ tests, computed by brute force.

Generators act by running every thread of the transducer and keeping the
output prefix all surviving runs agree on. Growth counts distinct actions on
eventually periodic points; traverses and ball classes come from a level-L
Schreier graph walked directly.

Usage: oracle.py [growth|traverses|balls|portraits]
"""
import json
import os
import sys

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "data")


class Machine:
    def __init__(self, name):
        with open(os.path.join(DATA, name + ".json")) as f:
            d = json.load(f)
        self.letters = d["alphabet"]
        self.allowed = {tuple(p) for p in d["allowed_pairs"]}
        self.states = {s["id"]: s for s in d["states"]}
        self.symbols = [g["symbol"] for g in d["generators"]]
        self.initial = [g["initial"] for g in d["generators"]]

    def ok(self, prev, x):
        return prev is None or (prev, x) in self.allowed

    def words(self, n):
        out = [()]
        for _ in range(n):
            out = [w + (x,) for w in out for x in self.letters if self.ok(w[-1] if w else None, x)]
        return out

    def moves(self, q, x):
        if q == "1":
            return [(x, "1")]
        s = self.states[q]
        mv = [(t["out"], t["next"]) for t in s["transitions"] if t["in"] == x]
        if not mv and s["identity_extended"]:
            mv = [(x, "1")]
        return mv

    def run(self, q0, w):
        threads = [(q0, ())]
        for x in w:
            nxt = []
            for q, out in threads:
                for y, r in self.moves(q, x):
                    if self.ok(out[-1] if out else None, y):
                        nxt.append((r, out + (y,)))
            threads = nxt
        return {out for _, out in threads}

    def image(self, q0, w, look=3):
        """Image of w, resolved by every valid continuation of length look."""
        outs = set()
        tails = [t for t in self.words(look) if not w or not t or self.ok(w[-1], t[0])]
        for t in tails:
            for o in self.run(q0, w + t):
                outs.add(o[: len(w)])
        if len(outs) != 1:
            raise RuntimeError("ambiguous image of %r under %s: %r" % (w, q0, outs))
        return outs.pop()


def common_prefix(outs):
    outs = list(outs)
    if not outs:
        raise RuntimeError("no admissible run")
    k = 0
    while all(len(o) > k and o[k] == outs[0][k] for o in outs):
        k += 1
    return outs[0][:k]


TAILS = {"grigorchuk": ("1",), "simple_grig": ("1",), "golden_mean": ("0",)}


def growth(name, level, radius, pad=40):
    """Elements are told apart by their action on the points u.tail^inf for
    every valid u of length `level`; each step keeps only the output prefix
    that every run agrees on."""
    m = Machine(name)
    tail = TAILS[name]
    points = [w + tail * pad for w in m.words(level) if m.ok(w[-1], tail[0])]

    def act(q, p):
        out = common_prefix(m.run(q, p))
        if len(out) < len(p) - 4:
            raise RuntimeError("output not determined")
        return out[: len(p) - 4]

    e = tuple(points)
    seen = {tuple(p[:level] for p in e)}
    frontier = [e]
    gamma = [1]
    for _ in range(radius):
        nxt = []
        for images in frontier:
            for q in m.initial:
                moved = tuple(act(q, p) for p in images)
                key = tuple(p[:level] for p in moved)
                if key not in seen:
                    seen.add(key)
                    nxt.append(moved)
        frontier = nxt
        gamma.append(len(seen))
    return gamma


def schreier_chain(name, level, start):
    """Level-`level` Schreier graph as a chain from the vertex `start`:
    returns (vertices in order, edge label sets, loop label sets)."""
    m = Machine(name)
    nbr = {}
    for w in m.words(level):
        nbr[w] = [m.image(q, w) for q in m.initial]
    order = [start]
    prev = None
    while True:
        cur = order[-1]
        nxt = {v for v in nbr[cur] if v != cur and v != prev}
        if not nxt:
            break
        assert len(nxt) == 1, "not a chain"
        prev = cur
        order.append(nxt.pop())
    pos = {v: i for i, v in enumerate(order)}
    k = len(m.initial)
    edges = [frozenset(s for s in range(k) if nbr[order[i]][s] == order[i + 1]) for i in range(len(order) - 1)]
    loops = [frozenset(s for s in range(k) if nbr[v][s] == v) for v in order]
    return order, edges, loops, pos


def test_word(length, k, x=12345):
    """Same LCG as the C++ tests."""
    w = []
    for _ in range(length):
        x = (x * 1103515245 + 12345) % 2**31
        w.append((x >> 16) % k)
    return w


def traverse_counts(name, level, start, n_max, length):
    """Traverses of the chain prefix [0, |I_n|] for each n with 2^n - 1 edges."""
    order, edges, loops, _ = schreier_chain(name, level, start)
    k = len(Machine(name).initial)
    w = test_word(length, k)
    out = []
    for n in range(1, n_max + 1):
        last = 2**n - 1

        def step(v, s):
            if v > 0 and s in edges[v - 1]:
                return v - 1
            if v < len(edges) and s in edges[v]:
                return v + 1
            return v

        count = 0
        for i in range(len(w)):
            v = 0
            for t in range(i, len(w)):
                u = step(v, w[t])
                # the entrance has unknown outside: staying put there leaves
                if u == 0 or (v == 0 and u == v):
                    break
                v = u
                if v == last:
                    count += 1
                    break
        out.append(count)
    return out


def ball_key(edges, loops, v, radius):
    """Reflection-free description of the radius-R ball around v, cut short
    at the start of the ray."""
    reach = min(radius, v)
    right = tuple((tuple(sorted(loops[v + d])), tuple(sorted(edges[v + d]))) for d in range(radius))
    left = tuple((tuple(sorted(loops[v - d])), tuple(sorted(edges[v - d - 1]))) for d in range(reach))
    centre = tuple(sorted(loops[v]))
    ends = (tuple(sorted(loops[v + radius])), tuple(sorted(loops[v - reach])))
    return (centre, right, left, ends), (centre, left, right, ends[::-1])


def ball_classes(name, level, start, radius):
    """Rooted radius-R balls of the chain prefix, up to reflection. The first
    vertex is the end of the ray, so balls there are cut short."""
    _, edges, loops, _ = schreier_chain(name, level, start)
    keys = set()
    for v in range(0, len(loops) - radius - 1):
        keys.add(min(ball_key(edges, loops, v, radius)))
    return len(keys)


def portrait_sizes(name, level, start, max_len, drop=1):
    """Largest standard portrait over all words of length <= R, for each R,
    on the chain prefix without its last `drop` vertices."""
    _, edges, loops, _ = schreier_chain(name, level, start)
    length = len(loops) - 1 - drop
    k = len(Machine(name).initial)

    def step(v, s):
        if v > 0 and s in edges[v - 1]:
            return v - 1
        if v < len(edges) and s in edges[v]:
            return v + 1
        return v

    best = []
    words = [()]
    for r in range(max_len + 1):
        top = 0
        for w in words:
            keys = set()
            for v in range(0, length - len(w) + 1):
                u, radius = v, 0
                for x in w:
                    u = step(u, x)
                    radius = max(radius, abs(u - v))
                a, b = ball_key(edges, loops, v, radius)
                keys.add(min((a, u - v), (b, v - u)))
            top = max(top, len(keys))
        best.append(top)
        words = [w + (x,) for w in words for x in range(k)]
    return best


if __name__ == "__main__":
    what = sys.argv[1] if len(sys.argv) > 1 else "growth"
    if what == "growth":
        print("grigorchuk", growth("grigorchuk", 10, 6))
        print("simple_grig", growth("simple_grig", 9, 5))
        print("golden_mean", growth("golden_mean", 10, 4))
    elif what == "traverses":
        print(traverse_counts("grigorchuk", 9, ("1",) * 9, 6, 400))
    elif what == "balls":
        print([ball_classes("grigorchuk", 11, ("1",) * 11, r) for r in (1, 2, 3, 5, 8, 13)])
    elif what == "portraits":
        print(portrait_sizes("grigorchuk", 11, ("1",) * 11, 4))
