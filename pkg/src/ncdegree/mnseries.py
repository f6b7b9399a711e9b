"""Truncated Malcev-Neumann series over the ordered free group.

A :class:`GroupSeries` stores finitely many coefficients together with a
:class:`Cut`.  Every coefficient of a word above the cut is exact; below it
nothing is known.  Cuts are bounds on the lexicographically ordered
:func:`~ncdegree.words.abelian_key` (degree, then exponent sums in precedence
order), which the group order refines and which is multiplicative, so the
pessimistic propagation rules are sound:

* ``a + b`` is exact above ``max(cut_a, cut_b)``;
* ``a * b`` is exact above ``max(cut_a + top(b), top(a) + cut_b)``.

A cut of length one is a plain degree floor.  Degree floors alone cannot
truncate inverses such as ``(1 + x*y*x^-2)^-1`` whose terms all have degree 0;
longer cuts handle those.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache, total_ordering

from .fields import Field, FieldMismatchError, FieldScalar
from .freealg import NcPoly
from .words import (
    OrderConfig,
    abelian_key,
    format_group_word,
    from_monoid,
    group_commutes,
    group_compare,
    group_inv,
    group_max,
    group_mul,
)

DEFAULT_MAX_TERMS = 16
MAX_SERIES_SIZE = 4000


@total_ordering
@dataclass(frozen=True)
class Cut:
    """Region boundary: words with ``abelian_key(w)[:len(bound)] > bound`` are exact."""

    bound: tuple

    @classmethod
    def degree(cls, d) -> Cut:
        return cls((d,))

    def admits(self, key: tuple) -> bool:
        return key[: len(self.bound)] > self.bound

    def shift(self, key: tuple) -> Cut:
        return Cut(tuple(b + k for b, k in zip(self.bound, key)))

    def __add__(self, other: Cut) -> Cut:
        return Cut(tuple(a + b for a, b in zip(self.bound, other.bound)))

    def _cmp_key(self, length):
        return self.bound + (math.inf,) * (length - len(self.bound))

    def __lt__(self, other: Cut):
        n = max(len(self.bound), len(other.bound))
        return self._cmp_key(n) < other._cmp_key(n)

    def __str__(self):
        if len(self.bound) == 1:
            return f"deg>{self.bound[0]}"
        return "key>(" + ",".join(str(b) for b in self.bound) + ")"


EXACT = Cut.degree(-math.inf)


def as_cut(floor) -> Cut:
    if isinstance(floor, Cut):
        return floor
    if floor is None:
        return EXACT
    return Cut.degree(floor)


@lru_cache(maxsize=500_000)
def _key(word, cfg):
    return abelian_key(word, cfg)


class GroupSeries:
    """Finite approximation of an element of K((F)); treat as immutable."""

    __slots__ = ("terms", "field", "order", "floor")

    def __init__(self, terms, field: Field, order: OrderConfig, floor=None, *, _clean=False):
        self.field = field
        self.order = order
        self.floor = as_cut(floor)
        if _clean:
            self.terms = terms
            return
        F = field
        out = {}
        for w, c in terms.items():
            c = F(c).value if isinstance(c, FieldScalar) else F.normalize(c)
            if c and self.floor.admits(_key(w, order)):
                out[w] = c
        self.terms = out

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_poly(cls, f: NcPoly, floor=None, order: OrderConfig = None) -> GroupSeries:
        order = order or OrderConfig(f.nvars)
        if order.nvars != f.nvars:
            raise ValueError("order and polynomial alphabets differ")
        return cls({from_monoid(w): c for w, c in f.terms.items()}, f.field, order, floor)

    @classmethod
    def monomial(cls, word, coeff, field, order, floor=None) -> GroupSeries:
        return cls({word: coeff}, field, order, floor)

    def _like(self, terms, floor):
        return GroupSeries(terms, self.field, self.order, floor, _clean=True)

    def unit(self) -> GroupSeries:
        return self._like({(): self.field.one_raw}, EXACT)

    one = unit

    def _check(self, other):
        if not isinstance(other, GroupSeries):
            raise TypeError(f"expected a GroupSeries, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if other.order != self.order:
            raise ValueError("series use different orders")

    # -- inspection ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def key_of(self, word):
        return _key(word, self.order)

    def top_key(self):
        return max(_key(w, self.order) for w in self.terms) if self.terms else None

    def upper_cut(self) -> Cut:
        """Region containing the whole (unknown) support."""
        if self.terms:
            return Cut(self.top_key())
        return self.floor

    def leading(self) -> tuple:
        if not self.terms:
            raise ValueError("no known nonzero terms above the floor")
        w = group_max(self.terms, self.order)
        return w, FieldScalar(self.field, self.terms[w])

    def coefficient(self, word) -> FieldScalar:
        return FieldScalar(self.field, self.terms.get(word, self.field.zero_raw))

    def degree(self):
        """Degree of the leading term (``None`` if nothing is known above the floor)."""
        k = self.top_key()
        return None if k is None else k[0]

    def truncate(self, cut) -> GroupSeries:
        cut = max(self.floor, as_cut(cut))
        o = self.order
        return self._like({w: c for w, c in self.terms.items() if cut.admits(_key(w, o))}, cut)

    def agrees_with(self, other: GroupSeries) -> bool:
        """Equality of the two series above their common (higher) floor."""
        cut = max(self.floor, other.floor)
        return self.truncate(cut).terms == other.truncate(cut).terms

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        self._check(other)
        F = self.field
        cut = max(self.floor, other.floor)
        o = self.order
        out = {w: c for w, c in self.terms.items() if cut.admits(_key(w, o))}
        for w, c in other.terms.items():
            if not cut.admits(_key(w, o)):
                continue
            s = F.add(out.get(w, F.zero_raw), c)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return self._like(out, cut)

    def __neg__(self):
        F = self.field
        return self._like({w: F.neg(c) for w, c in self.terms.items()}, self.floor)

    def __sub__(self, other):
        return self + (-other)

    def scalar_mul(self, c) -> GroupSeries:
        c = self.field(c).value
        F = self.field
        if not c:
            return self._like({}, self.floor)
        return self._like({w: F.mul(c, v) for w, v in self.terms.items()}, self.floor)

    def mul(self, other: GroupSeries, cut=None) -> GroupSeries:
        """Product, exact above the propagated floor (raised to ``cut`` if given)."""
        self._check(other)
        floor = max(self.floor + other.upper_cut(), self.upper_cut() + other.floor)
        if cut is not None:
            floor = max(floor, as_cut(cut))
        F = self.field
        o = self.order
        zero = F.zero_raw
        n = len(floor.bound)
        bound = floor.bound
        right = [(w, c, _key(w, o)[:n]) for w, c in other.terms.items()]
        out = {}
        for u, a in self.terms.items():
            ku = _key(u, o)[:n]
            for v, b, kv in right:
                if tuple(x + y for x, y in zip(ku, kv)) <= bound:
                    continue
                w = group_mul(u, v)
                out[w] = F.add(out.get(w, zero), F.mul(a, b))
        return self._like({w: c for w, c in out.items() if c}, floor)

    def __mul__(self, other):
        if isinstance(other, GroupSeries):
            return self.mul(other)
        return NotImplemented

    def left_word(self, word, coeff=None) -> GroupSeries:
        """``coeff * word * self`` for an exact monomial."""
        F = self.field
        c = F.one_raw if coeff is None else F(coeff).value
        terms = {group_mul(word, w): F.mul(c, v) for w, v in self.terms.items()}
        return self._like(terms, self.floor.shift(_key(word, self.order)))

    def right_word(self, word, coeff=None) -> GroupSeries:
        F = self.field
        c = F.one_raw if coeff is None else F(coeff).value
        terms = {group_mul(w, word): F.mul(v, c) for w, v in self.terms.items()}
        return self._like(terms, self.floor.shift(_key(word, self.order)))

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        result = self.unit()
        for _ in range(k):
            result = result.mul(self)
        return result

    # -- text ---------------------------------------------------------
    def format(self, names=None, limit=None) -> str:
        """Terms in decreasing group order, then ``O(floor)`` unless exact."""
        tail = "" if self.floor == EXACT else f" + O({self.floor})"
        if not self.terms:
            return "0" + tail
        o = self.order
        words = sorted(self.terms, key=cmp_to_key(lambda a, b: group_compare(a, b, o)), reverse=True)
        shown = words if limit is None else words[:limit]
        F = self.field
        out = []
        for w in shown:
            c = self.terms[w]
            negative = F.characteristic == 0 and c < 0
            mag = F.format(-c if negative else c)
            body = mag if not w else (format_group_word(w, names) if mag == "1" else f"{mag}*{format_group_word(w, names)}")
            if not out:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f" - {body}" if negative else f" + {body}")
        more = "" if len(shown) == len(words) else f" + ...({len(words) - len(shown)} more)"
        return "".join(out) + more + tail

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GroupSeries({self.format(limit=6)})"


TruncatedGroupSeries = GroupSeries


def from_poly(f: NcPoly, floor=None, order: OrderConfig = None) -> GroupSeries:
    return GroupSeries.from_poly(f, floor, order)


def invert(a: GroupSeries, cut=None, max_terms: int = DEFAULT_MAX_TERMS) -> GroupSeries:
    """Inverse via the geometric series around the leading term.

    With ``a = c*u*(1 + r)`` this sums ``(-r)^k`` until the powers fall below
    the cut.  If ``max_terms`` powers are not enough (``v(r)`` in the
    commutator subgroup, or a cut too deep), the floor is raised to the key of
    ``v(r)^(max_terms+1)`` so the result stays exact above its floor.
    """
    if not a.terms:
        raise ZeroDivisionError("inverse of a series with no known terms")
    F = a.field
    o = a.order
    u, c = a.leading()
    c_inv = F.inv(c.value)
    u_inv = group_inv(u)
    ku = _key(u, o)
    rest = {w: v for w, v in a.terms.items() if w != u}
    r = a._like(rest, a.floor).left_word(u_inv, FieldScalar(F, c_inv))
    target = r.floor
    if cut is not None:
        target = max(target, as_cut(cut).shift(ku))
    neg_r = -r
    s = a.unit().truncate(target)
    power = a.unit()
    k = 0
    while True:
        k += 1
        power = power.mul(neg_r, cut=target)
        s = s + power
        if not power.terms:
            break
        if k >= max_terms or len(power) > MAX_SERIES_SIZE:
            # the dropped tail sum_{j>k} (-r)^j sits at or below (k+1)*key(v(r))
            s = s.truncate(Cut(tuple((k + 1) * x for x in r.top_key())))
            break
    return s.right_word(u_inv, FieldScalar(F, c_inv))


def conjugate(a: GroupSeries, t: GroupSeries, cut=None, max_terms: int = DEFAULT_MAX_TERMS) -> GroupSeries:
    """``t * a * t^-1``."""
    if not t.terms:
        raise ZeroDivisionError("conjugation by a series with no known terms")
    return t.mul(a).mul(invert(t, max_terms=max_terms), cut=cut)


def ratio(t, u, cfg: OrderConfig):
    """The smaller of ``t*u^-1`` and ``u^-1*t``.

    With leading terms taken as support maxima, the correction that strictly
    lowers the residual is built from the smaller quotient.
    """
    left = group_mul(t, group_inv(u))
    right = group_mul(group_inv(u), t)
    return left if group_compare(left, right, cfg) <= 0 else right


def evaluate(P: NcPoly, images) -> GroupSeries:
    """``P(images)`` with series images."""
    one = images[0].unit()
    return P.substitute(list(images), one=one)


# ---------------------------------------------------------------------------
# Bergman's centralizer algorithm


@dataclass(frozen=True)
class ConjugationState:
    """One approximation ``(t, b, e)``: ``residual = e*b*e^-1 - a`` above its floor."""

    b: GroupSeries
    e: GroupSeries
    residual: GroupSeries
    step_count: int = 0

    @property
    def residual_lead(self):
        """Leading word of the residual, or ``None`` once it vanishes above its floor."""
        if not self.residual.terms:
            return None
        return self.residual.leading()[0]

    @property
    def alpha(self):
        if not self.residual.terms:
            return None
        return self.residual.leading()[1]

    @property
    def done(self) -> bool:
        return not self.residual.terms


@dataclass(frozen=True)
class StepRecord:
    index: int
    case: int
    lead: tuple
    coefficient: FieldScalar
    correction: tuple
    next_lead: tuple
    floor: Cut

    def to_dict(self, names=None):
        return {
            "step": self.index,
            "case": self.case,
            "residual_lead": format_group_word(self.lead, names),
            "residual_coefficient": str(self.coefficient),
            "correction_word": format_group_word(self.correction, names),
            "next_lead": None if self.next_lead is None else format_group_word(self.next_lead, names),
            "floor": str(self.floor),
        }


@dataclass
class CentralizeResult:
    b: GroupSeries
    e: GroupSeries
    status: str
    reason: str
    residual: GroupSeries
    steps: list = field(default_factory=list)
    lead: tuple = ()

    @property
    def complete(self) -> bool:
        return self.status == "complete"


def _relative_cut(t, cfg: OrderConfig, depth: int) -> Cut:
    k = abelian_key(t, cfg)
    length = cfg.nvars if cfg.nvars >= 2 else 1
    k = k[:length]
    return Cut(k[:-1] + (k[-1] - depth,))


def _residual(a, b, e, u, t_prev, depth, max_terms) -> GroupSeries:
    if e.terms == {(): a.field.one_raw}:
        return b - a
    ku = _key(u, a.order)
    tries = [_relative_cut(t_prev, a.order, d) for d in range(1, depth + 1)] + [a.floor]
    r = None
    for w in tries:
        w = max(w, a.floor)
        e_inv = invert(e, cut=w.shift(tuple(-k for k in ku)), max_terms=max_terms)
        conj = e.mul(b, cut=w).mul(e_inv, cut=w)
        r = conj - a
        if r.terms or r.floor <= a.floor:
            return r
    return r


def initial_state(a: GroupSeries) -> ConjugationState:
    u, c = a.leading()
    b = GroupSeries.monomial(u, c, a.field, a.order, a.floor)
    e = a.unit()
    return ConjugationState(b, e, b - a, 0)


def bergman_step(state: ConjugationState, a: GroupSeries, *, depth: int = 2,
                 max_terms: int = DEFAULT_MAX_TERMS) -> tuple:
    """Apply one correction; returns ``(new_state, StepRecord)``.

    Case 3 (lead commutes with ``u = v(a)``) moves the residual's leading term
    into ``b``; cases 1 and 2 add ``-(alpha/c)*t*u^-1`` or ``(alpha/c)*u^-1*t``
    to ``e``, whichever quotient is smaller, where ``c = c(a)``.
    """
    if state.done:
        raise ValueError("the residual already vanishes above the floor")
    cfg = a.order
    F = a.field
    u, c = a.leading()
    t, alpha = state.residual.leading()
    b, e = state.b, state.e
    if group_commutes(t, u):
        case, word = 3, t
        b = b - GroupSeries.monomial(t, alpha, F, cfg, b.floor)
    else:
        # adding beta*w to e changes e*b*e^-1 by c*beta*(w*u - u*w) to first order
        beta = alpha * c.inverse()
        word = ratio(t, u, cfg)
        if word == group_mul(t, group_inv(u)):
            case = 1
            e = e - GroupSeries.monomial(word, beta, F, cfg, e.floor)
        else:
            case = 2
            e = e + GroupSeries.monomial(word, beta, F, cfg, e.floor)
    residual = _residual(a, b, e, u, t, depth, max_terms)
    new = ConjugationState(b, e, residual, state.step_count + 1)
    nxt = new.residual_lead
    if nxt is not None and group_compare(nxt, t, cfg) >= 0:
        raise AssertionError(
            f"residual lead did not decrease: {format_group_word(t)} -> {format_group_word(nxt)}"
        )
    record = StepRecord(new.step_count, case, t, alpha, word, nxt, residual.floor)
    return new, record


def centralize(a: GroupSeries, step_budget: int = 50, *, depth: int = 2,
               max_terms: int = DEFAULT_MAX_TERMS) -> CentralizeResult:
    """Find ``e`` (leading term 1) and ``b`` supported on the centralizer of ``v(a)``
    with ``e*a*e^-1 = b`` above the floor.

    Returns status ``complete`` when the residual vanishes above ``a.floor``;
    otherwise ``truncated`` with reason ``budget`` (steps exhausted) or
    ``precision`` (the residual could only be certified above a raised floor).
    """
    if not a.terms:
        raise ValueError("cannot centralize a series with no known terms")
    if step_budget < 1:
        raise ValueError("step budget must be positive")
    u, _ = a.leading()
    state = initial_state(a)
    steps = []
    while not state.done and state.step_count < step_budget:
        state, record = bergman_step(state, a, depth=depth, max_terms=max_terms)
        steps.append(record)
    final = state.residual.floor
    if state.done and final <= a.floor:
        status, reason = "complete", ""
    elif state.done:
        status, reason = "truncated", "precision"
    else:
        status, reason = "truncated", "budget"
    cfg = a.order
    ku = _key(u, cfg)
    e = GroupSeries(state.e.terms, a.field, cfg, final.shift(tuple(-k for k in ku)))
    b = GroupSeries(state.b.terms, a.field, cfg, final)
    return CentralizeResult(b, e, status, reason, state.residual, steps, u)
