"""Bounded brute-force congruence closure over raw relation pairs.

This is the engine's independent ground truth on small instances: a
breadth-first search that applies every relation at every occurrence in
both directions, with no normal forms, orders, or completion involved.
Paths are recorded so every answer replays step by step.

Bounds: max_degree caps the degree of each component of a visited
monomial (a total-degree cap would wall off identities whose shortest
witness paths pass through large intermediate monomials), max_circ_len
caps the component count, and max_expansions caps dequeued nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .terms import CommMonomial, RigMonomial, Word
from .rewrite import Context, base_monomials_up_to, pattern_occurrences

CONGRUENT = "Congruent"
NOT_FOUND = "NotFoundWithinBounds"


@dataclass(frozen=True)
class ClosureBounds:
    max_degree: int = 10
    max_circ_len: int = 8
    max_expansions: int = 100_000


@dataclass(frozen=True)
class ClosureStep:
    """One rewrite: context[pattern side] = source, context[other side]
    = result.  forward means the pair was applied left to right."""

    rel_index: int
    forward: bool
    context: Context
    result: RigMonomial


def _ident(commutative, alphabet):
    if commutative:
        return CommMonomial.identity(len(alphabet))
    return Word(())


def _insertion_cofactors(rep, commutative, alphabet, bounds):
    """Cofactor pairs (a, b) for expanding with a theta-side relation."""
    budget = bounds.max_degree - rep.max_component_degree()
    if budget < 0:
        return []
    ident = _ident(commutative, alphabet)
    bases = base_monomials_up_to(alphabet, commutative, budget)
    if commutative:
        return [(a, ident) for a in bases]
    out = []
    for a in bases:
        for b in bases:
            if a.degree() + b.degree() <= budget:
                out.append((a, b))
    return out


def _neighbors(m, rels, commutative, alphabet, bounds, ident):
    out = []
    for idx, (lhs, rhs) in enumerate(rels):
        for forward in (True, False):
            pat, rep = (lhs, rhs) if forward else (rhs, lhs)
            if pat.is_theta:
                if m.circ_len() + rep.circ_len() > bounds.max_circ_len:
                    continue
                for a, b in _insertion_cofactors(rep, commutative,
                                                 alphabet, bounds):
                    ctx = Context(a, b, m)
                    res = ctx.apply_mon(rep)
                    out.append(ClosureStep(idx, forward, ctx, res))
                continue
            for ctx in pattern_occurrences(m, pat, commutative, ident):
                res = ctx.apply_mon(rep)
                if res.circ_len() > bounds.max_circ_len:
                    continue
                if res.max_component_degree() > bounds.max_degree:
                    continue
                out.append(ClosureStep(idx, forward, ctx, res))
    return out


def _search(u, rels, commutative, alphabet, bounds, target):
    """BFS from u; stops early when target is reached (if given).

    Returns (parents, hit) where parents maps each visited monomial to
    (previous monomial, step) and hit says whether target was found.
    """
    ident = _ident(commutative, alphabet)
    parents = {u: None}
    if target is not None and u == target:
        return parents, True
    queue = deque([u])
    expansions = 0
    while queue and expansions < bounds.max_expansions:
        m = queue.popleft()
        expansions += 1
        for step in _neighbors(m, rels, commutative, alphabet, bounds,
                               ident):
            r = step.result
            if r in parents:
                continue
            parents[r] = (m, step)
            if target is not None and r == target:
                return parents, True
            queue.append(r)
    return parents, False


def _path_to(parents, v):
    steps = []
    cur = v
    while parents[cur] is not None:
        prev, step = parents[cur]
        steps.append(step)
        cur = prev
    steps.reverse()
    return steps


def closure_eq(u: RigMonomial, v: RigMonomial, rels, commutative: bool,
               alphabet, bounds: ClosureBounds = None):
    """(status, path): Congruent with a replayable witness path from u
    to v, or NotFoundWithinBounds (which proves nothing)."""
    if bounds is None:
        bounds = ClosureBounds()
    parents, hit = _search(u, rels, commutative, alphabet, bounds, v)
    if hit:
        return CONGRUENT, _path_to(parents, v)
    return NOT_FOUND, None


def closure_class(u: RigMonomial, rels, commutative: bool, alphabet,
                  bounds: ClosureBounds = None) -> frozenset:
    """All monomials reachable from u within the bounds."""
    if bounds is None:
        bounds = ClosureBounds()
    parents, _ = _search(u, rels, commutative, alphabet, bounds, None)
    return frozenset(parents)


def replay_path(u: RigMonomial, path, rels) -> RigMonomial:
    """Re-execute a witness path, checking every step, and return the
    final monomial."""
    cur = u
    for step in path:
        lhs, rhs = rels[step.rel_index]
        pat, rep = (lhs, rhs) if step.forward else (rhs, lhs)
        if step.context.apply_mon(pat) != cur:
            raise ValueError("path step does not match its source")
        cur = step.context.apply_mon(rep)
        if cur != step.result:
            raise ValueError("path step result mismatch")
    return cur
