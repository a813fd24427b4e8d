"""Planar Temperley-Lieb diagrams and cap/cup words.

A diagram from m points to n points is a noncrossing perfect matching on
the m + n boundary points plus a count of free loops. Points are labeled
1..m along the bottom and m+1..m+n along the top, both left to right.
Composition stacks diagrams, traces strands through the interface, and
counts the closed loops it swallows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IndexOutOfRange, InvalidWord, MathError, ShapeMismatch


@dataclass(frozen=True)
class PlanarDiagram:
    source: int
    target: int
    pairs: tuple = field(default=())
    loops: int = 0

    def __post_init__(self):
        m, n = self.source, self.target
        if m < 0 or n < 0 or self.loops < 0:
            raise ValueError("negative source, target or loop count")
        if (m + n) % 2:
            raise ValueError("no perfect matching on %d + %d points" % (m, n))
        pairs = tuple(tuple(sorted(p)) for p in self.pairs)
        seen = [x for p in pairs for x in p]
        if sorted(seen) != list(range(1, m + n + 1)):
            raise ValueError("pairs do not match each boundary point exactly once")
        object.__setattr__(self, "pairs", tuple(sorted(pairs)))
        # noncrossing test: walk the boundary cycle, pairs must nest
        partner = {}
        for a, b in pairs:
            pa, pb = self._position(a), self._position(b)
            partner[pa], partner[pb] = pb, pa
        stack = []
        for p in range(m + n):
            if partner[p] > p:
                stack.append(partner[p])
            elif not stack or stack.pop() != p:
                raise ValueError("pairs cross")

    def _position(self, point: int) -> int:
        """Boundary cycle: bottom left to right, then top right to left."""
        m, n = self.source, self.target
        return point - 1 if point <= m else 2 * m + n - point

    def partner_of(self, point: int) -> int:
        for a, b in self.pairs:
            if a == point:
                return b
            if b == point:
                return a
        raise IndexOutOfRange("no boundary point %d" % point)

    def __str__(self):
        return "TL(%d -> %d; %s; %d loops)" % (
            self.source, self.target,
            " ".join("%d-%d" % p for p in self.pairs), self.loops)


@dataclass(frozen=True)
class Letter:
    op: str
    i: int

    def __post_init__(self):
        if self.op not in ("cap", "cup"):
            raise InvalidWord("unknown letter %r" % (self.op,))


@dataclass(frozen=True)
class TLWord:
    """A composable sequence of elementary caps and cups, applied in order."""

    source: int
    letters: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.source < 0:
            raise InvalidWord("negative strand count")
        k = self.source
        for let in self.letters:
            if let.op == "cap":
                if k < 2 or not 1 <= let.i <= k - 1:
                    raise InvalidWord("cap at %d on %d strands" % (let.i, k))
                k -= 2
            else:
                if not 1 <= let.i <= k + 1:
                    raise InvalidWord("cup at %d on %d strands" % (let.i, k))
                k += 2

    @property
    def target(self) -> int:
        k = self.source
        for let in self.letters:
            k += -2 if let.op == "cap" else 2
        return k


def identity(n: int) -> PlanarDiagram:
    return PlanarDiagram(n, n, tuple((j, n + j) for j in range(1, n + 1)))


def cap(n: int, i: int) -> PlanarDiagram:
    """Contract strands i, i+1: Hom(n, n-2)."""
    if n < 2 or not 1 <= i <= n - 1:
        raise IndexOutOfRange("cap at %d on %d strands" % (i, n))
    pairs = [(i, i + 1)]
    for j in range(1, n + 1):
        if j < i:
            pairs.append((j, n + j))
        elif j > i + 1:
            pairs.append((j, n + j - 2))
    return PlanarDiagram(n, n - 2, tuple(pairs))


def cup(n: int, i: int) -> PlanarDiagram:
    """Insert a paired strand couple at position i: Hom(n, n+2)."""
    if not 1 <= i <= n + 1:
        raise IndexOutOfRange("cup at %d on %d strands" % (i, n))
    pairs = [(n + i, n + i + 1)]
    for j in range(1, n + 1):
        pairs.append((j, n + j if j < i else n + j + 2))
    return PlanarDiagram(n, n + 2, tuple(pairs))


def generator_h(n: int, i: int) -> PlanarDiagram:
    """The i-th Temperley-Lieb generator on n strands (cap then cup)."""
    if n < 2 or not 1 <= i <= n - 1:
        raise IndexOutOfRange("generator %d on %d strands" % (i, n))
    pairs = [(i, i + 1), (n + i, n + i + 1)]
    for j in range(1, n + 1):
        if j not in (i, i + 1):
            pairs.append((j, n + j))
    return PlanarDiagram(n, n, tuple(pairs))


def compose(g: PlanarDiagram, f: PlanarDiagram) -> PlanarDiagram:
    """g after f; strands trace through the interface, closed cycles count."""
    if f.target != g.source:
        raise ShapeMismatch("cannot compose %d -> %d with %d -> %d"
                            % (f.source, f.target, g.source, g.target))
    m, b, n = f.source, f.target, g.target
    adj = {}

    def link(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for x, y in f.pairs:
        link(("f", x), ("f", y))
    for x, y in g.pairs:
        link(("g", x), ("g", y))
    for t in range(1, b + 1):
        link(("f", m + t), ("g", t))
    label = {("f", i): i for i in range(1, m + 1)}
    label.update({("g", b + j): m + j for j in range(1, n + 1)})
    visited = set()
    pairs = []
    for start in label:
        if start in visited:
            continue
        visited.add(start)
        prev, cur = None, start
        while True:
            nxt = next(x for x in adj[cur] if x != prev)
            if nxt in label:
                visited.add(nxt)
                pairs.append((label[start], label[nxt]))
                break
            prev, cur = cur, nxt
            visited.add(cur)
    loops = f.loops + g.loops
    for node in adj:
        if node in visited or node in label:
            continue
        loops += 1
        prev, cur = None, node
        while True:
            visited.add(cur)
            nxt = next(x for x in adj[cur] if x != prev)
            if nxt == node:
                break
            prev, cur = cur, nxt
    return PlanarDiagram(m, n, tuple(pairs), loops)


def tensor(f: PlanarDiagram, g: PlanarDiagram) -> PlanarDiagram:
    """Side-by-side juxtaposition, f to the left of g."""
    m, n = f.source + g.source, f.target + g.target

    def re_f(p):
        return p if p <= f.source else m + (p - f.source)

    def re_g(p):
        return f.source + p if p <= g.source else m + f.target + (p - g.source)

    pairs = [(re_f(a), re_f(b)) for a, b in f.pairs]
    pairs += [(re_g(a), re_g(b)) for a, b in g.pairs]
    return PlanarDiagram(m, n, tuple(pairs), f.loops + g.loops)


def verify_relations(n: int) -> int:
    """Check the Temperley-Lieb relations at diagram level up to n strands.

    h_i h_i = loop h_i, far commutation, h_i h_{i+-1} h_i = h_i, and the
    snake identities of caps against cups. Returns the number of
    identities checked; raises MathError naming the first failure.
    """
    if n < 2:
        raise IndexOutOfRange("relations need at least 2 strands, got %d" % n)
    checked = 0

    def expect(got, want, name):
        nonlocal checked
        if got != want:
            raise MathError("relation %s fails at diagram level" % name)
        checked += 1

    for m in range(2, n + 1):
        hs = {i: generator_h(m, i) for i in range(1, m)}
        for i, hi in hs.items():
            expect(compose(hi, hi), PlanarDiagram(m, m, hi.pairs, 1),
                   "h%d h%d = loop h%d on %d strands" % (i, i, i, m))
            for j, hj in hs.items():
                if abs(i - j) >= 2:
                    expect(compose(hi, hj), compose(hj, hi),
                           "h%d h%d = h%d h%d on %d strands" % (i, j, j, i, m))
                elif abs(i - j) == 1:
                    expect(compose(hi, compose(hj, hi)), hi,
                           "h%d h%d h%d = h%d on %d strands" % (i, j, i, i, m))
    for m in range(0, n - 1):
        for j in range(1, m + 2):
            if j >= 2:
                expect(compose(cap(m + 2, j - 1), cup(m, j)), identity(m),
                       "left snake at %d on %d strands" % (j, m))
            if j <= m:
                expect(compose(cap(m + 2, j + 1), cup(m, j)), identity(m),
                       "right snake at %d on %d strands" % (j, m))
            expect(compose(cap(m + 2, j), cup(m, j)),
                   PlanarDiagram(m, m, identity(m).pairs, 1),
                   "cap against cup at %d on %d strands" % (j, m))
    return checked


def _matchings(positions: list) -> list:
    """All noncrossing perfect matchings on an ordered position list."""
    if not positions:
        return [[]]
    out = []
    a = positions[0]
    for idx in range(1, len(positions), 2):
        b = positions[idx]
        for inner in _matchings(positions[1:idx]):
            for outer in _matchings(positions[idx + 1:]):
                out.append([(a, b)] + inner + outer)
    return out


def enumerate_basis(m: int, n: int) -> list:
    """All loopless diagrams in Hom(m, n); Catalan((m+n)/2) of them."""
    if m < 0 or n < 0:
        raise ShapeMismatch("negative strand count")
    if (m + n) % 2:
        return []

    def point(p):
        return p + 1 if p < m else 2 * m + n - p

    out = []
    for match in _matchings(list(range(m + n))):
        pairs = tuple(tuple(sorted((point(a), point(b)))) for a, b in match)
        out.append(PlanarDiagram(m, n, pairs))
    return out


def word_to_diagram(w: TLWord) -> PlanarDiagram:
    d = identity(w.source)
    k = w.source
    for let in w.letters:
        step = cap(k, let.i) if let.op == "cap" else cup(k, let.i)
        d = compose(step, d)
        k = step.target
    return d


def diagram_to_word(d: PlanarDiagram) -> TLWord:
    """The caps-then-cups normal form of the loop-free part of d.

    Caps peel innermost adjacent bottom pairs (leftmost first), cups
    rebuild top pairs symmetrically; the through strands pass between.
    Loops are not encoded: word_to_diagram of the result reproduces d
    with loops = 0, and evaluation scales by d's loop count separately.
    """
    match = dict(d.pairs)
    match.update({b: a for a, b in d.pairs})
    caps = []
    strands = list(range(1, d.source + 1))
    while True:
        hit = next((k for k in range(len(strands) - 1)
                    if match[strands[k]] == strands[k + 1]), None)
        if hit is None:
            break
        caps.append(hit + 1)
        del strands[hit:hit + 2]
    cups_rev = []
    tops = list(range(d.source + 1, d.source + d.target + 1))
    while True:
        hit = next((k for k in range(len(tops) - 1)
                    if match[tops[k]] == tops[k + 1]), None)
        if hit is None:
            break
        cups_rev.append(hit + 1)
        del tops[hit:hit + 2]
    letters = [Letter("cap", i) for i in caps]
    letters += [Letter("cup", i) for i in reversed(cups_rev)]
    return TLWord(d.source, tuple(letters))
