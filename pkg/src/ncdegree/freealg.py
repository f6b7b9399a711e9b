"""Sparse polynomials in noncommuting variables, K<x_1, ..., x_n>."""

from __future__ import annotations

from functools import total_ordering

from .fields import Field, FieldMismatchError, FieldScalar, QQ
from .words import (
    OrderConfig,
    commutes,
    default_names,
    deglex_key,
    format_monoid_word,
    from_monoid,
    group_max,
)


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer, supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"

    def __int__(self):
        raise TypeError("the zero polynomial has no integer degree")


MINUS_INFINITY = _MinusInfinity()


class NcPoly:
    """Finite map from monoid words to nonzero raw field values.

    Treat instances as immutable.  ``terms`` maps word tuples to raw values of
    ``field`` (see :mod:`ncdegree.fields`).
    """

    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms=None, nvars: int = 2, field: Field = QQ, *, _clean=False):
        self.nvars = nvars
        self.field = field
        if _clean:
            self.terms = terms
            return
        out = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if any(not 0 <= g < nvars for g in w):
                raise ValueError(f"word {w} uses a letter outside an alphabet of size {nvars}")
            c = field(c).value if isinstance(c, FieldScalar) else field.normalize(c)
            if c:
                c = field.add(out.get(w, field.zero_raw), c)
                if c:
                    out[w] = c
                else:
                    out.pop(w, None)
        self.terms = out

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars=2, field=QQ):
        return cls({}, nvars, field, _clean=True)

    @classmethod
    def constant(cls, c, nvars=2, field=QQ):
        return cls({(): c}, nvars, field)

    @classmethod
    def var(cls, i, nvars=2, field=QQ):
        return cls({(i,): 1}, nvars, field)

    @classmethod
    def monomial(cls, word, coeff=1, nvars=2, field=QQ):
        return cls({tuple(word): coeff}, nvars, field)

    def _like(self, terms):
        return NcPoly(terms, self.nvars, self.field, _clean=True)

    def _check(self, other: NcPoly):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if other.nvars != self.nvars:
            raise ValueError(f"alphabet size {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, FieldScalar)) or hasattr(other, "denominator"):
            return NcPoly.constant(other, self.nvars, self.field)
        return NotImplemented

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = F.add(out.get(w, F.zero_raw), c)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return self._like({w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out = {}
        zero = F.zero_raw
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                out[w] = F.add(out.get(w, zero), F.mul(a, b))
        return self._like({w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def scalar_mul(self, c) -> NcPoly:
        c = self.field(c).value
        if not c:
            return NcPoly.zero(self.nvars, self.field)
        F = self.field
        return self._like({w: F.mul(c, v) for w, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = NcPoly.constant(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return (self.field, self.nvars, self.terms) == (other.field, other.nvars, other.terms)
        if isinstance(other, int):
            return self == NcPoly.constant(other, self.nvars, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(len(w) == 0 for w in self.terms)

    def coefficient(self, word) -> FieldScalar:
        return FieldScalar(self.field, self.terms.get(tuple(word), self.field.zero_raw))

    def support(self):
        return list(self.terms)

    def degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(len(w) for w in self.terms)

    def partial_degree(self, i: int):
        if not self.terms:
            return MINUS_INFINITY
        return max(w.count(i) for w in self.terms)

    def weighted_degree(self, weights):
        if len(weights) != self.nvars:
            raise ValueError(f"need {self.nvars} weights, got {len(weights)}")
        if not self.terms:
            return MINUS_INFINITY
        return max(word_weight(w, weights) for w in self.terms)

    def leading(self, cfg: OrderConfig = None) -> tuple:
        """``(v(f), c(f))``: the deglex-largest word and its coefficient."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        cfg = cfg or OrderConfig(self.nvars)
        w = max(self.terms, key=lambda u: deglex_key(u, cfg))
        return w, FieldScalar(self.field, self.terms[w])

    def group_leading(self, cfg: OrderConfig = None) -> tuple:
        """Leading term under the free-group order used by the series code."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        cfg = cfg or OrderConfig(self.nvars)
        top = max(len(w) for w in self.terms)
        by_group = {from_monoid(w): w for w in self.terms if len(w) == top}
        w = by_group[group_max(by_group, cfg)]
        return w, FieldScalar(self.field, self.terms[w])

    def homogeneous_part(self, d: int) -> NcPoly:
        return self._like({w: c for w, c in self.terms.items() if len(w) == d})

    def leading_part(self, weights) -> NcPoly:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading part")
        top = self.weighted_degree(weights)
        return self._like({w: c for w, c in self.terms.items() if word_weight(w, weights) == top})

    def is_homogeneous(self, weights=None) -> bool:
        weights = weights or (1,) * self.nvars
        return len({word_weight(w, weights) for w in self.terms}) <= 1

    def substitute(self, images, one=None):
        """Image under the algebra map sending variable ``i`` to ``images[i]``.

        Works for any ring elements supporting ``+`` and ``*`` and scalar
        multiplication through ``scalar_mul``; ``one`` is the unit to use for
        the empty word (defaults to the unit polynomial of ``images[0]``).
        """
        return substitute(self, images, one)

    # -- text -------------------------------------------------------------
    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        names = names or default_names(self.nvars)
        cfg = OrderConfig(self.nvars)
        words = sorted(self.terms, key=lambda u: deglex_key(u, cfg), reverse=True)
        F = self.field
        pieces = []
        for w in words:
            c = self.terms[w]
            negative = F.characteristic == 0 and c < 0
            mag = F.format(-c if negative else c)
            if not w:
                body = mag
            elif mag == "1":
                body = format_monoid_word(w, names)
            else:
                body = f"{mag}*{format_monoid_word(w, names)}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"NcPoly({self.format()!r}, nvars={self.nvars}, field={self.field})"


def word_weight(w, weights) -> int:
    return sum(weights[g] for g in w)


def commutator(f: NcPoly, g: NcPoly) -> NcPoly:
    return f * g - g * f


def substitute(P: NcPoly, images, one=None):
    if len(images) != P.nvars:
        raise ValueError(f"P has {P.nvars} variables but {len(images)} images were given")
    if one is None:
        first = images[0]
        if isinstance(first, NcPoly):
            for im in images[1:]:
                first._check(im)
            one = NcPoly.constant(1, first.nvars, first.field)
        else:
            one = first.one()
    field = getattr(one, "field", None)
    if field is not None and field != P.field:
        raise FieldMismatchError(f"P is over {P.field}, images over {field}")
    cache = {(): one}

    def product_of(word):
        hit = cache.get(word)
        if hit is None:
            hit = product_of(word[:-1]) * images[word[-1]]
            cache[word] = hit
        return hit

    total = None
    for w in sorted(P.terms, key=len):
        term = product_of(w).scalar_mul(FieldScalar(P.field, P.terms[w]))
        total = term if total is None else total + term
    if total is None:
        return one.scalar_mul(P.field.zero)
    return total


def independent_pair(f: NcPoly, g: NcPoly) -> bool:
    """Algebraic independence of two nonconstant elements, decided by ``[f, g] != 0``.

    Nonconstant elements of a free algebra are dependent exactly when they
    commute: the centralizer of a nonconstant element is a polynomial ring in
    one variable.
    """
    if f.is_constant() or g.is_constant():
        raise ValueError("independence is only decided for nonconstant elements")
    return not commutator(f, g).is_zero()


def leading_words_commute(f: NcPoly, g: NcPoly, cfg: OrderConfig = None) -> bool:
    return commutes(f.group_leading(cfg)[0], g.group_leading(cfg)[0])
