"""Words in the free monoid and the free group, and the orders on them.

Monoid words are tuples of generator indices, e.g. ``(0, 0, 1)`` is ``x*x*y``.
Group words are reduced run-length tuples of ``(generator, exponent)`` pairs,
e.g. ``((0, 1), (1, 1), (0, -2))`` is ``x*y*x^-2``.  Both are plain tuples so
they hash quickly as dictionary keys; the alphabet size is carried by the
containers (polynomials, series) and by :class:`OrderConfig`.

The group order is total degree first, then the Magnus order: the sign of the
first nonzero coefficient of ``M(a*b^-1) - 1`` where ``M`` sends
``x_i -> 1 + t_i``.  Monomials in the ``t_i`` are scanned by degree and then
lexicographically by generator precedence.  The degree-one coefficients of
``M(w)`` are the exponent sums, so the order refines the lexicographic order on
the :func:`abelian_key` vector; series truncation relies on that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb

MonoidWord = tuple
GroupWord = tuple

ALIASES = "xyzw"


@dataclass(frozen=True)
class OrderConfig:
    """Generator precedence for both orders; ``precedence[0]`` is the largest."""

    nvars: int
    precedence: tuple = None
    rank: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("alphabet size must be at least 1")
        prec = tuple(range(self.nvars)) if self.precedence is None else tuple(self.precedence)
        if sorted(prec) != list(range(self.nvars)):
            raise ValueError(f"precedence {prec} is not a permutation of range({self.nvars})")
        object.__setattr__(self, "precedence", prec)
        rank = [0] * self.nvars
        for r, g in enumerate(prec):
            rank[g] = r
        object.__setattr__(self, "rank", tuple(rank))


def default_names(nvars: int) -> tuple:
    if nvars <= len(ALIASES):
        return tuple(ALIASES[:nvars])
    return tuple(f"x{i + 1}" for i in range(nvars))


# ---------------------------------------------------------------------------
# monoid words


def concat(u: MonoidWord, v: MonoidWord) -> MonoidWord:
    return u + v


def primitive_root(w: MonoidWord) -> tuple:
    """Return ``(root, exponent)`` with ``w == root * exponent`` and exponent maximal."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    raise AssertionError("unreachable")


def commutes(u: MonoidWord, v: MonoidWord) -> bool:
    return u + v == v + u


def deglex_key(w: MonoidWord, cfg: OrderConfig) -> tuple:
    """Sort key: longer words are larger, ties broken by generator precedence."""
    top = cfg.nvars
    return (len(w), tuple(top - cfg.rank[g] for g in w))


def deglex_compare(u: MonoidWord, v: MonoidWord, cfg: OrderConfig) -> int:
    ku, kv = deglex_key(u, cfg), deglex_key(v, cfg)
    return (ku > kv) - (ku < kv)


def format_monoid_word(w: MonoidWord, names=None) -> str:
    if not w:
        return "1"
    names = names or default_names(max(w) + 1)
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(names[w[i]] if j - i == 1 else f"{names[w[i]]}^{j - i}")
        i = j
    return "*".join(parts)


# ---------------------------------------------------------------------------
# group words


def group_reduce(pairs) -> GroupWord:
    """Freely reduce any iterable of ``(generator, exponent)`` pairs."""
    out = []
    for g, e in pairs:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            ne = out[-1][1] + e
            if ne:
                out[-1] = (g, ne)
            else:
                out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def from_monoid(w: MonoidWord) -> GroupWord:
    return group_reduce((g, 1) for g in w)


def to_monoid(a: GroupWord):
    """The positive word spelled by ``a``, or ``None`` if an exponent is negative."""
    if any(e < 0 for _, e in a):
        return None
    return tuple(g for g, e in a for _ in range(e))


def group_mul(a: GroupWord, b: GroupWord) -> GroupWord:
    if not a:
        return b
    if not b:
        return a
    out = list(a)
    for g, e in b:
        if out and out[-1][0] == g:
            ne = out[-1][1] + e
            if ne:
                out[-1] = (g, ne)
            else:
                out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def group_inv(a: GroupWord) -> GroupWord:
    return tuple((g, -e) for g, e in reversed(a))


def group_pow(a: GroupWord, k: int) -> GroupWord:
    if k < 0:
        a, k = group_inv(a), -k
    out = ()
    for _ in range(k):
        out = group_mul(out, a)
    return out


def group_commutes(a: GroupWord, b: GroupWord) -> bool:
    return group_mul(a, b) == group_mul(b, a)


def letter_count(a: GroupWord) -> int:
    return sum(abs(e) for _, e in a)


def degree(w) -> int:
    """Word length for monoid words, signed exponent sum for group words."""
    if w and isinstance(w[0], tuple):
        return sum(e for _, e in w)
    return len(w)


def partial_degree(w, i: int) -> int:
    if w and isinstance(w[0], tuple):
        return sum(e for g, e in w if g == i)
    return sum(1 for g in w if g == i)


def abelian_key(a: GroupWord, cfg: OrderConfig) -> tuple:
    """``(degree, exponent sums in precedence order)``; the group order refines it."""
    sums = [0] * cfg.nvars
    for g, e in a:
        sums[g] += e
    return (sum(sums),) + tuple(sums[g] for g in cfg.precedence)


def group_root(a: GroupWord) -> tuple:
    """``(root, k)`` with ``a == root^k``, root not a proper power, for cyclically
    reduced ``a``; returns ``None`` when ``a`` is not cyclically reduced.
    """
    if not a:
        raise ValueError("the unit word has no root")
    letters = tuple((g, 1 if e > 0 else -1) for g, e in a for _ in range(abs(e)))
    if len(letters) > 1 and letters[0] == (letters[-1][0], -letters[-1][1]):
        return None
    root, k = primitive_root(letters)
    return group_reduce(root), k


def format_group_word(a: GroupWord, names=None) -> str:
    if not a:
        return "1"
    names = names or default_names(max(g for g, _ in a) + 1)
    return "*".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in a)


# ---------------------------------------------------------------------------
# Magnus expansion and the group order


def _factor_coefficients(e: int, depth: int) -> list:
    """Coefficients of ``(1 + t)^e`` up to ``t^depth``."""
    if e >= 0:
        return [comb(e, k) for k in range(min(e, depth) + 1)]
    m = -e
    return [(-1) ** k * comb(m + k - 1, k) for k in range(depth + 1)]


def magnus_expand(a: GroupWord, depth: int) -> dict:
    """Image of ``a`` under ``x_i -> 1 + t_i``, truncated above total degree ``depth``.

    Returns a dict from monomials (tuples of generator indices) to integers.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    series = {(): 1}
    for g, e in a:
        coeffs = _factor_coefficients(e, depth)
        nxt = {}
        for mono, c in series.items():
            room = depth - len(mono)
            for k in range(min(room, len(coeffs) - 1) + 1):
                key = mono + (g,) * k
                nxt[key] = nxt.get(key, 0) + c * coeffs[k]
        series = {m: c for m, c in nxt.items() if c}
    return series


class OrderFailure(RuntimeError):
    """Magnus expansions of distinct words agreed; indicates a bug."""


@lru_cache(maxsize=200_000)
def _magnus_sign(c: GroupWord, rank: tuple) -> int:
    """Sign of ``c`` in the Magnus order, given its abelianization vanishes."""
    total = letter_count(c)
    depth = 2
    while True:
        d = min(depth, total)
        series = magnus_expand(c, d)
        lowest = None
        for mono, coef in series.items():
            if mono and coef:
                k = (len(mono), tuple(rank[g] for g in mono))
                if lowest is None or k < lowest[0]:
                    lowest = (k, coef)
        if lowest is not None:
            return 1 if lowest[1] > 0 else -1
        if d >= total:
            raise OrderFailure(f"Magnus expansion of nontrivial word {c} is trivial")
        depth *= 2


def group_compare(a: GroupWord, b: GroupWord, cfg: OrderConfig) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    if a == b:
        return 0
    ka, kb = abelian_key(a, cfg), abelian_key(b, cfg)
    if ka != kb:
        return 1 if ka > kb else -1
    return _magnus_sign(group_mul(a, group_inv(b)), cfg.rank)


def group_max(words, cfg: OrderConfig):
    """Largest word of a nonempty iterable under :func:`group_compare`."""
    words = list(words)
    if not words:
        raise ValueError("empty collection")
    keyed = [(abelian_key(w, cfg), w) for w in words]
    top = max(k for k, _ in keyed)
    best = None
    for k, w in keyed:
        if k == top and (best is None or group_compare(w, best, cfg) > 0):
            best = w
    return best


def all_monoid_words(nvars: int, max_len: int, min_len: int = 0):
    for length in range(min_len, max_len + 1):
        yield from product(range(nvars), repeat=length)
