"""Shared generators for randomized tests.

Everything is seeded explicitly in the tests; these helpers only build
values from a supplied random.Random.
"""

import random
from fractions import Fraction

from rigbasis import Alphabet, CommMonomial, Polynomial, RigMonomial, Word


def rand_comm_base(rng, nvars, max_deg=4):
    exps = [0] * nvars
    for _ in range(rng.randint(0, max_deg)):
        exps[rng.randrange(nvars)] += 1
    return CommMonomial(tuple(exps))


def rand_word(rng, nvars, max_len=4):
    return Word(tuple(rng.randrange(nvars)
                      for _ in range(rng.randint(0, max_len))))


def rand_base(rng, nvars, commutative, max_deg=4):
    if commutative:
        return rand_comm_base(rng, nvars, max_deg)
    return rand_word(rng, nvars, max_deg)


def rand_mono(rng, nvars, commutative, max_len=3, max_deg=4):
    comps = [rand_base(rng, nvars, commutative, max_deg)
             for _ in range(rng.randint(0, max_len))]
    return RigMonomial.from_components(comps)


def rand_poly(rng, nvars, commutative, max_terms=3, max_len=3, max_deg=3):
    p = Polynomial.zero()
    for _ in range(rng.randint(0, max_terms)):
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]),
                     rng.choice([1, 1, 2]))
        m = rand_mono(rng, nvars, commutative, max_len, max_deg)
        p = p.add(Polynomial.monomial(m, c))
    return p


def numeric_closure(pairs, limit=16):
    """Partition of {0..limit} under the additive congruence the pairs
    generate, by shift-saturated union-find.  Independent of the engine;
    multiplicative closure follows from additive shifts (k copies of
    a ~ b chain to ka ~ kb)."""
    parent = list(range(limit + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[max(ra, rb)] = min(ra, rb)
        return True

    for a, b in pairs:
        if a <= limit and b <= limit:
            union(a, b)
    changed = True
    while changed:
        changed = False
        for a in range(limit):
            for b in range(a + 1, limit + 1):
                if find(a) == find(b) and b + 1 <= limit:
                    if union(a + 1, b + 1):
                        changed = True
    classes = {}
    for v in range(limit + 1):
        classes.setdefault(find(v), []).append(v)
    return frozenset(tuple(c) for c in classes.values())
