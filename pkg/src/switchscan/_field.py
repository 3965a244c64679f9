"""Lookup-table arithmetic for the few small fields the catalog needs.

Elements are encoded as integers 0..q-1 by their coefficient vectors in base
p (constant term first).
"""

from __future__ import annotations

from functools import lru_cache

# monic modulus, low coefficients first (the leading 1 is implicit)
_MODULI = {
    4: (2, (1, 1)),        # x^2 + x + 1
    8: (2, (1, 1, 0)),     # x^3 + x + 1
    9: (3, (1, 0)),        # x^2 + 1
    16: (2, (1, 1, 0, 0)),  # x^4 + x + 1
    25: (5, (2, 1)),       # x^2 + x + 2
}


class Field:
    def __init__(self, q: int):
        if q in _MODULI:
            p, mod = _MODULI[q]
            k = len(mod)
        elif q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1)):
            p, mod, k = q, (), 1
        else:
            raise ValueError(f"no field table for q={q}")
        self.q, self.p, self.k = q, p, k
        vec = [self._vec(a) for a in range(q)]
        self.add = [[self._enc([(x + y) % p for x, y in zip(vec[a], vec[b])]) for b in range(q)]
                    for a in range(q)]
        self.neg = [self._enc([(-x) % p for x in vec[a]]) for a in range(q)]
        self.mul = [[self._polymul(vec[a], vec[b], mod) for b in range(q)] for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = next(b for b in range(1, q) if self.mul[a][b] == 1)
        self.primitive = next(a for a in range(2 if q > 2 else 1, q) if self._order(a) == q - 1)
        self.squares = frozenset(self.mul[a][a] for a in range(1, q))

    def _vec(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _enc(self, v):
        out = 0
        for c in reversed(v):
            out = out * self.p + c
        return out

    def _polymul(self, u, v, mod):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(len(prod) - 1, k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i, m in enumerate(mod):
                    prod[d - k + i] = (prod[d - k + i] - c * m) % p
        return self._enc(prod[:k])

    def _order(self, a):
        x, n = a, 1
        while x != 1:
            x = self.mul[x][a]
            n += 1
            if n > self.q:
                return 0
        return n

    def sub(self, a, b):
        return self.add[a][self.neg[b]]

    def power(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul[r][a]
        return r

    def frobenius(self, a):
        return self.power(a, self.p)


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    return Field(q)
