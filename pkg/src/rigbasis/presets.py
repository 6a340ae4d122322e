"""Built-in presentations, normal-form families, and scenario checkers.

Presets:
  fiore-leinster  one commutative generator with x = 1 + x + x^2
  blass           one commutative generator with x = 1 + x^2
  znc             integer noncommutative polynomials as a semiring
                  quotient, over two variables with inverse marks
  nat             the natural numbers, x = 1
  chain           1 + x = x, whose reduced basis is infinite

Family predicates are closed-form histogram tests on components,
independent of the rewrite engine, so agreement with the irreducibility
enumeration is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import (Alphabet, CommMonomial, RigMonomial, THETA, Word)
from .ordering import default_keyword
from .rewrite import System, is_irreducible, normal_form_monomial, orient_pair
from .frontend import Presentation, parse_expr
from .completion import (CompletionReport, STATUS_COMPLETE, complete,
                         decide_eq, EQUAL)
from .oracle import ClosureBounds, CONGRUENT, closure_eq


@dataclass
class Preset:
    name: str
    presentation: Presentation
    basis_pairs: list          # claimed basis as (lhs, rhs) pairs, or None
    family: object             # normal-form membership predicate, or None

    def basis_system(self) -> System:
        if self.basis_pairs is None:
            raise ValueError(f"preset {self.name!r} states no finite basis")
        order = self.presentation.order()
        rels = [orient_pair(m, n, order) for m, n in self.basis_pairs]
        return System(self.presentation.commutative,
                      self.presentation.alphabet, order, tuple(rels))


def _comm_presentation(rel_texts):
    p = Presentation(True, Alphabet(["x"]), default_keyword(True), [])
    for lhs, rhs in rel_texts:
        p.relations.append((parse_expr(lhs, p), parse_expr(rhs, p)))
    return p


def _parse_pairs(p, texts):
    return [(parse_expr(l, p), parse_expr(r, p)) for l, r in texts]


# degree histogram of a one-variable commutative rig monomial
def _histogram(m: RigMonomial, max_deg):
    counts = [0] * (max_deg + 1)
    for b, mult in m.runs:
        d = b.degree()
        if d > max_deg:
            return None
        counts[d] += mult
    return counts


def fl_family(m: RigMonomial) -> bool:
    """Normal forms of the one-generator semiring with x = 1 + x + x^2:
    powers of x mix with 1s, with x^2 and x^3 blocks on their own, plus
    the single-x^2 shapes 1^k + x^2."""
    h = _histogram(m, 3)
    if h is None:
        return False
    c0, c1, c2, c3 = h
    if c0 >= 1 and c1 == 0 and c2 == 1 and c3 == 0:
        return True
    if c2 == 0 and c3 == 0:
        return True
    if c1 == 0 and c2 == 0:
        return True
    if c0 == 0 and c3 == 0:
        return True
    if c0 == 0 and c1 == 0:
        return True
    return False


def blass_family(m: RigMonomial) -> bool:
    """Normal forms of x = 1 + x^2: blocks on two adjacent degrees up to
    (3,4), plus 1^n + x^3 and 1^n + (x^4)^m."""
    h = _histogram(m, 4)
    if h is None:
        return False
    support = [d for d, c in enumerate(h) if c]
    if len(support) <= 1:
        return True
    if len(support) == 2:
        lo, hi = support
        if hi == lo + 1:
            return True
        if (lo, hi) == (0, 3) and h[3] == 1:
            return True
        if (lo, hi) == (0, 4):
            return True
    return False


def blass_even_family(m: RigMonomial) -> bool:
    """The alternative normal-form set for x = 1 + x^2, over degrees
    {0, 2, 4} only."""
    h = _histogram(m, 4)
    if h is None or h[1] or h[3]:
        return False
    c0, c2, c4 = h[0], h[2], h[4]
    return (c4 == 0 or c0 == 0 or c2 == 0 or (c2 == 1 and c4 == 1))


def _power_monomial(exp, count):
    if count == 0:
        return THETA
    return RigMonomial.singleton(CommMonomial((exp,)), count)


def blass_family_truncation(pmax: int) -> list:
    """The source family with all parameters at most pmax, deduplicated
    by value and sorted ascending."""
    out = set()
    for n in range(pmax + 1):
        for m in range(pmax + 1):
            for t in range(4):
                out.add(_power_monomial(t, n).circ(_power_monomial(t + 1, m)))
        out.add(_power_monomial(0, n).circ(_power_monomial(3, 1)))
        for m in range(pmax + 1):
            out.add(_power_monomial(0, n).circ(_power_monomial(4, m)))
    return sorted(out, key=lambda u: u.skey)


def blass_even_map(u: RigMonomial) -> RigMonomial:
    """The explicit bijection from the engine's normal-form family onto
    the alternative one; rewrites x as 1 + x^2 and x^3 as x^2 + x^4 at
    the family level.  Raises for arguments outside the source family."""
    h = _histogram(u, 4)
    if h is None or not blass_family(u):
        raise ValueError("monomial outside the source family")
    support = [d for d, c in enumerate(h) if c]
    if support == [0, 3] and h[3] == 1:
        n = h[0]
        return (_power_monomial(0, n).circ(_power_monomial(2, 1))
                .circ(_power_monomial(4, 1)))
    if support in ([0, 4], [0], [4], []):
        return u
    # two adjacent degrees (t, t+1), or a single degree treated as t
    if len(support) == 2:
        t = support[0]
        n, m = h[t], h[t + 1]
    else:
        d = support[0]
        t, n, m = (3, 0, h[4]) if d == 4 else (d, h[d], 0)
    if t == 0:
        return _power_monomial(0, n + m).circ(_power_monomial(2, m))
    if t == 1:
        return _power_monomial(0, n).circ(_power_monomial(2, n + m))
    if t == 2:
        return _power_monomial(2, n + m).circ(_power_monomial(4, m))
    return _power_monomial(2, n).circ(_power_monomial(4, n + m))


def transport_check(members, mapping, report: CompletionReport,
                    oracle_bounds: ClosureBounds = None) -> bool:
    """Certify that mapping carries the normal-form family members onto
    another normal-form family of the same congruence.

    Checks injectivity on members, congruence of u with mapping(u) for
    every u, and pairwise distinct congruence classes of the images.
    With oracle_bounds set, each congruence is additionally confirmed
    by the closure oracle."""
    if report.status != STATUS_COMPLETE:
        raise ValueError("transport check needs a Complete report")
    images = {}
    for u in members:
        fu = mapping(u)
        if fu in images:
            return False
        images[fu] = u
    image_nfs = set()
    for fu, u in images.items():
        verdict, nu, nfu = decide_eq(u, fu, report)
        if verdict != EQUAL:
            return False
        image_nfs.add(nfu)
        if oracle_bounds is not None:
            basis = report.basis
            pairs = [rel.pair() for rel in basis.active_relations()]
            status, _ = closure_eq(u, fu, pairs, basis.commutative,
                                   basis.alphabet, oracle_bounds)
            if status != CONGRUENT:
                return False
    return len(image_nfs) == len(images)


# noncommutative preset over two variables with inverse marks

ZNC_NAMES = ["e'", "y", "y'", "x", "x'"]
ZNC_PLAIN = ["y", "x"]                       # ascending precedence
ZNC_MARK = {"y": "y'", "x": "x'"}


def _znc_relations(alphabet: Alphabet):
    """Instantiate the six defining schemas over the two variables."""
    r = alphabet.rank
    w = lambda *names: Word(tuple(r(n) for n in names))
    mono = RigMonomial.from_components
    pairs = []
    for v in ZNC_PLAIN:                       # v + v' = 0
        pairs.append((mono([w(v), w(ZNC_MARK[v])]), THETA))
    pairs.append((mono([w(), w("e'")]), THETA))   # 1 + e' = 0
    for v in ZNC_PLAIN:                       # v' w' = v w
        for u in ZNC_PLAIN:
            pairs.append((mono([w(ZNC_MARK[v], ZNC_MARK[u])]),
                          mono([w(v, u)])))
    for v in ZNC_PLAIN:                       # v w' = v' w
        for u in ZNC_PLAIN:
            pairs.append((mono([w(v, ZNC_MARK[u])]),
                          mono([w(ZNC_MARK[v], u)])))
    for v in ZNC_PLAIN:                       # v e' = v',  v' e' = v
        pairs.append((mono([w(v, "e'")]), mono([w(ZNC_MARK[v])])))
        pairs.append((mono([w(ZNC_MARK[v], "e'")]), mono([w(v)])))
    for v in ZNC_PLAIN:                       # e' v = v',  e' v' = v
        pairs.append((mono([w("e'", v)]), mono([w(ZNC_MARK[v])])))
        pairs.append((mono([w("e'", ZNC_MARK[v])]), mono([w(v)])))
    return pairs


def _znc_component_shape(word: Word, alphabet: Alphabet):
    """(plain word, sign) when the component fits the normal-form shape,
    else None.  Shape: empty, a lone inverse unit, or a word whose first
    letter may carry an inverse mark and whose tail is plain."""
    plain_ranks = {alphabet.rank(v) for v in ZNC_PLAIN}
    mark_to_plain = {alphabet.rank(ZNC_MARK[v]): alphabet.rank(v)
                     for v in ZNC_PLAIN}
    ls = word.letters
    if not ls:
        return ((), 1)
    if ls == (alphabet.rank("e'"),):
        return ((), -1)
    first, rest = ls[0], ls[1:]
    if any(t not in plain_ranks for t in rest):
        return None
    if first in plain_ranks:
        return (ls, 1)
    if first in mark_to_plain:
        return ((mark_to_plain[first],) + rest, -1)
    return None


def znc_shape(m: RigMonomial, alphabet: Alphabet = None) -> bool:
    """Membership in the printed normal-form shape: inverse marks only
    on first letters."""
    if alphabet is None:
        alphabet = Alphabet(ZNC_NAMES)
    return all(_znc_component_shape(b, alphabet) is not None
               for b in m.distinct_components())


def znc_family(m: RigMonomial, alphabet: Alphabet = None) -> bool:
    """Membership in the exact normal-form set: the printed shape plus
    sign consistency (no plain word occurring with both signs), i.e. the
    image of an integer noncommutative polynomial."""
    if alphabet is None:
        alphabet = Alphabet(ZNC_NAMES)
    signs = {}
    for b in m.distinct_components():
        shape = _znc_component_shape(b, alphabet)
        if shape is None:
            return False
        word, sign = shape
        if signs.setdefault(word, sign) != sign:
            return False
    return True


# integer noncommutative polynomials as dicts: tuple of names -> int

def intpoly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for w, c in q.items():
        acc = out.get(w, 0) + c
        if acc:
            out[w] = acc
        elif w in out:
            del out[w]
    return out


def intpoly_mul(p: dict, q: dict) -> dict:
    out = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            acc = out.get(w, 0) + c1 * c2
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
    return out


def sign_encode(p: dict, alphabet: Alphabet = None) -> RigMonomial:
    """Image of an integer noncommutative polynomial in the quotient
    semiring: each term contributes |coeff| copies of its word, the
    sign carried by an inverse mark on the first letter."""
    if alphabet is None:
        alphabet = Alphabet(ZNC_NAMES)
    runs = []
    for word, c in p.items():
        if not c:
            continue
        if c > 0:
            letters = tuple(alphabet.rank(v) for v in word)
        elif word:
            letters = ((alphabet.rank(ZNC_MARK[word[0]]),)
                       + tuple(alphabet.rank(v) for v in word[1:]))
        else:
            letters = (alphabet.rank("e'"),)
        runs.append((Word(letters), abs(c)))
    return RigMonomial(tuple(runs))


def sign_encode_check(p: dict, q: dict, system: System = None) -> bool:
    """Transport of sums and products: reducing the image of p op q must
    agree with reducing the op of the images, for both operations."""
    if system is None:
        system = preset("znc").basis_system()
    a = system.alphabet
    sp, sq = sign_encode(p, a), sign_encode(q, a)
    prod_img = normal_form_monomial(sp.times(sq), system)
    prod_dir = normal_form_monomial(sign_encode(intpoly_mul(p, q), a), system)
    if prod_img != prod_dir:
        return False
    sum_img = normal_form_monomial(sp.circ(sq), system)
    sum_dir = normal_form_monomial(sign_encode(intpoly_add(p, q), a), system)
    return sum_img == sum_dir


# natural-number congruences

def nat_pair_monomials(n: int, m: int):
    one = CommMonomial.identity(1)
    return (RigMonomial.singleton(one, n) if n else THETA,
            RigMonomial.singleton(one, m) if m else THETA)


def nat_congruence_generator(pairs):
    """Reduce a finite set of additive relations on the naturals to the
    single pair generating the same congruence, or None for the identity
    congruence."""
    alphabet = Alphabet(["x"])
    x = RigMonomial.singleton(CommMonomial((1,)))
    one = RigMonomial.singleton(CommMonomial.identity(1))
    rel_pairs = [(x, one)]
    for n, m in pairs:
        if n == m:
            continue
        rel_pairs.append(nat_pair_monomials(n, m))
    report = complete(rel_pairs, True, alphabet)
    if report.status != STATUS_COMPLETE:
        raise RuntimeError("completion of a naturals congruence truncated")
    found = []
    for rel in report.basis.active_relations():
        if rel.lhs.total_degree() == 0 and rel.rhs.total_degree() == 0:
            found.append((rel.lhs.circ_len(), rel.rhs.circ_len()))
    if len(found) > 1:
        raise AssertionError("reduced basis kept more than one additive "
                             "relation on the naturals")
    return found[0] if found else None


def noetherian_chain_demo(depth: int) -> list:
    """Strictness certificates for the ascending chain of congruences of
    1 + x^n = x^n: at level n the monomial 1 + x^(n+1) admits no
    occurrence of any smaller leading monomial."""
    p = _comm_presentation([])
    order = p.order()
    evidence = []
    for n in range(1, depth + 1):
        rels = []
        for i in range(1, n + 1):
            lhs = parse_expr(f"1 + x^{i}", p)
            rhs = parse_expr(f"x^{i}", p)
            rels.append(orient_pair(lhs, rhs, order))
        sysn = System(True, p.alphabet, order, tuple(rels))
        target = parse_expr(f"1 + x^{n + 1}", p)
        evidence.append((n, is_irreducible(target, sysn)))
    return evidence


def _build_presets():
    out = {}

    p = _comm_presentation([("x", "1 + x + x^2")])
    basis = _parse_pairs(p, [
        ("x^4", "1 + 1 + x^2"),
        ("x + x^3", "1 + x^2"),
        ("1 + x^2 + x", "x"),
        ("1 + x^2 + x^2", "x^2"),
        ("1 + x^2 + x^3", "x^3"),
    ])
    out["fiore-leinster"] = Preset("fiore-leinster", p, basis, fl_family)

    p = _comm_presentation([("x", "1 + x^2")])
    basis = _parse_pairs(p, [
        ("1 + x^2", "x"),
        ("x + x^4", "1 + x^3"),
        ("x^5", "1 + x^4"),
        ("1 + x^3 + x^3", "x^3"),
        ("1 + x^3 + x^4", "x^4"),
    ])
    out["blass"] = Preset("blass", p, basis, blass_family)

    alphabet = Alphabet(ZNC_NAMES)
    rels = _znc_relations(alphabet)
    p = Presentation(False, alphabet, default_keyword(False),
                     list(rels))
    # the schema instantiation alone has one nontrivial self-composition
    # (the unit rule inside its own inverse-unit component); its closure
    # adds the inverse-unit square rule
    e = alphabet.rank("e'")
    square = (RigMonomial.from_components([Word((e, e))]),
              RigMonomial.from_components([Word(())]))
    out["znc"] = Preset("znc", p, list(rels) + [square], znc_family)

    p = _comm_presentation([("x", "1")])
    basis = _parse_pairs(p, [("x", "1")])
    out["nat"] = Preset("nat", p, basis, None)

    p = _comm_presentation([("1 + x", "x")])
    out["chain"] = Preset("chain", p, None, None)

    return out


_PRESETS = _build_presets()


def preset_names():
    return sorted(_PRESETS)


def preset(name: str) -> Preset:
    try:
        return _PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset: {name!r}") from None
