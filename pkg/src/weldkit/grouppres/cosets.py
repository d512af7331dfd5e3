"""Todd-Coxeter coset enumeration (HLT strategy with coincidence handling).

Used to decide whether a single generator already generates the whole group:
the subgroup it generates has index 1 exactly when enumeration closes with
one coset.
"""

from __future__ import annotations


class CosetLimit(Exception):
    pass


def coset_index(rank: int, relators, subgroup_gens, max_cosets: int = 100_000) -> int | None:
    """Index of the subgroup generated by ``subgroup_gens``, or None if the
    enumeration exceeds ``max_cosets`` live cosets."""
    try:
        return _Enumerator(rank, relators, subgroup_gens, max_cosets).run()
    except CosetLimit:
        return None


class _Enumerator:
    def __init__(self, rank, relators, subgroup_gens, max_cosets):
        self.ncols = 2 * rank
        self.rels = [self._cols(r) for r in relators if r]
        self.subs = [self._cols(w) for w in subgroup_gens if w]
        self.max = max_cosets
        self.table = [[-1] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.queue = []

    @staticmethod
    def _cols(word):
        return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in word]

    def run(self):
        for w in self.subs:
            self._scan_and_fill(0, w)
        c = 0
        while c < len(self.table):
            if self.parent[c] == c:
                for r in self.rels:
                    self._scan_and_fill(c, r)
                    if self.parent[c] != c:
                        break
                if self.parent[c] == c:
                    row = self.table[c]
                    for x in range(self.ncols):
                        if row[x] < 0:
                            self._define(c, x)
            c += 1
        return sum(1 for i, p in enumerate(self.parent) if p == i)

    def _define(self, c, x):
        if self.live >= self.max:
            raise CosetLimit
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def _scan_and_fill(self, c, word):
        table = self.table
        n = len(word)
        f, i = c, 0
        b, j = c, n - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] >= 0:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self._define(f, word[i])

    def _find(self, c):
        p = self.parent
        while p[c] != c:
            p[c] = p[p[c]]
            c = p[c]
        return c

    def _merge(self, a, b):
        a, b = self._find(a), self._find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.live -= 1
        self.queue.append(b)

    def _coincidence(self, a, b):
        self._merge(a, b)
        table = self.table
        while self.queue:
            e = self.queue.pop(0)
            for x in range(self.ncols):
                f = table[e][x]
                if f < 0:
                    continue
                table[f][x ^ 1] = -1
                e1 = self._find(e)
                f1 = self._find(f)
                if table[e1][x] >= 0:
                    self._merge(f1, table[e1][x])
                elif table[f1][x ^ 1] >= 0:
                    self._merge(e1, table[f1][x ^ 1])
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1
