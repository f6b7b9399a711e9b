"""Degree estimate for two-generated subalgebras of a free algebra.

For algebraically independent ``f, g`` whose leading words commute, and whose
degrees ``m, n`` do not divide each other, every nonconstant ``P`` satisfies::

    deg P(f, g) >= w_{m,n}(P) * deg [f, g] / (m + n)

:func:`verify_instance` checks this by exact arithmetic.  :func:`pipeline_trace`
replays the constructive argument behind it (centralize, peel, leading parts,
witness monomial) on truncated series and reports every intermediate degree.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .fields import Field, FieldScalar, QQ, GF
from .freealg import MINUS_INFINITY, NcPoly, commutator, word_weight
from .mnseries import (
    EXACT,
    DEFAULT_MAX_TERMS,
    GroupSeries,
    as_cut,
    centralize,
    evaluate,
    invert,
)
from .words import (
    OrderConfig,
    commutes,
    format_group_word,
    format_monoid_word,
    from_monoid,
    group_pow,
    primitive_root,
)

XY = ("x", "y")
TS = ("t", "s")


# ---------------------------------------------------------------------------
# hypotheses, bound, direct verification


@dataclass(frozen=True)
class HypothesisReport:
    f_nonconstant: bool
    g_nonconstant: bool
    independent: bool
    leading_dependent: bool
    m: int
    n: int
    divisibility_ok: bool

    @property
    def all_satisfied(self) -> bool:
        return (self.f_nonconstant and self.g_nonconstant and self.independent
                and self.leading_dependent and self.divisibility_ok)

    def failed(self) -> list:
        return [name for name in ("f_nonconstant", "g_nonconstant", "independent",
                                  "leading_dependent", "divisibility_ok") if not getattr(self, name)]

    def to_dict(self):
        d = asdict(self)
        d["all_satisfied"] = self.all_satisfied
        return d


def _int_degree(p: NcPoly) -> int:
    d = p.degree()
    return -1 if d is MINUS_INFINITY else d


def check_hypotheses(f: NcPoly, g: NcPoly, cfg: OrderConfig = None) -> HypothesisReport:
    cfg = cfg or OrderConfig(f.nvars)
    f_nc, g_nc = not f.is_constant(), not g.is_constant()
    m, n = _int_degree(f), _int_degree(g)
    independent = f_nc and g_nc and not commutator(f, g).is_zero()
    dependent = False
    if f_nc and g_nc:
        dependent = commutes(f.group_leading(cfg)[0], g.group_leading(cfg)[0])
    divisibility = m > 0 and n > 0 and n % m != 0 and m % n != 0
    return HypothesisReport(f_nc, g_nc, independent, dependent, m, n, divisibility)


def weighted_N(P: NcPoly, m: int, n: int):
    return P.weighted_degree((m, n))


def degree_bound(P: NcPoly, f: NcPoly, g: NcPoly) -> Fraction:
    """``w_{m,n}(P) * deg[f,g] / (m+n)`` as an exact rational."""
    if P.is_constant() or f.is_constant() or g.is_constant():
        raise ValueError("P, f and g must be nonconstant")
    c = commutator(f, g)
    if c.is_zero():
        raise ValueError("f and g commute; deg [f,g] is undefined")
    m, n = f.degree(), g.degree()
    return Fraction(P.weighted_degree((m, n)) * c.degree(), m + n)


def _format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass
class EstimateReport:
    lhs_degree: int
    weighted_N: int
    commutator_degree: int
    bound: Fraction
    hypothesis: HypothesisReport
    leading_exact: bool = None

    @property
    def holds(self) -> bool:
        return self.bound is not None and self.lhs_degree >= self.bound

    @property
    def slack(self):
        return None if self.bound is None else self.lhs_degree - self.bound

    def to_dict(self, P=None, f=None, g=None, field: Field = None):
        d = {}
        if P is not None:
            d.update({"f": f.format(), "g": g.format(), "P": P.format(XY)})
        if field is not None:
            d["field"] = field.tag
        d.update({
            "m": self.hypothesis.m,
            "n": self.hypothesis.n,
            "N": self.weighted_N,
            "comm_deg": self.commutator_degree,
            "bound": None if self.bound is None else _format_fraction(self.bound),
            "lhs": self.lhs_degree,
            "slack": None if self.slack is None else _format_fraction(Fraction(self.slack)),
            "holds": self.holds,
            "hypotheses": self.hypothesis.to_dict(),
        })
        if self.leading_exact is not None:
            d["leading_exact"] = self.leading_exact
        return d


def verify_instance(P: NcPoly, f: NcPoly, g: NcPoly, cfg: OrderConfig = None) -> EstimateReport:
    """Compute both sides of the estimate exactly.

    When the leading words of ``f`` and ``g`` do not commute the left side
    must equal ``w_{m,n}(P)``; ``leading_exact`` records that check.
    """
    if P.is_constant():
        raise ValueError("P must be nonconstant")
    cfg = cfg or OrderConfig(f.nvars)
    hyp = check_hypotheses(f, g, cfg)
    lhs = _int_degree(P.substitute([f, g]))
    N = P.weighted_degree((hyp.m, hyp.n)) if hyp.m >= 0 and hyp.n >= 0 else None
    c = commutator(f, g)
    comm = _int_degree(c)
    bound = None
    if hyp.f_nonconstant and hyp.g_nonconstant and not c.is_zero():
        bound = Fraction(N * comm, hyp.m + hyp.n)
    exact = None
    if hyp.f_nonconstant and hyp.g_nonconstant and not hyp.leading_dependent:
        exact = lhs == N
        if not exact:
            raise AssertionError(f"independent leading words but deg P(f,g) = {lhs} != w = {N}")
    return EstimateReport(lhs, N, comm, bound, hyp, exact)


# ---------------------------------------------------------------------------
# peeling along the centralizer root


class PeelBudgetExceeded(RuntimeError):
    def __init__(self, coefficients, remainder, steps):
        super().__init__(f"peeling did not finish within {steps} steps")
        self.coefficients = coefficients
        self.remainder = remainder
        self.steps = steps


def _power_of(word, h, group: bool):
    """Exponent ``k`` with ``word == h^k``, else ``None``."""
    if group:
        hg = from_monoid(h)
        deg = sum(e for _, e in word)
        if deg % len(h):
            return None
        k = deg // len(h)
        return k if group_pow(hg, k) == word else None
    if len(word) % len(h):
        return None
    k = len(word) // len(h)
    return k if h * k == word else None


def peel_decomposition(g_elem, h, cfg: OrderConfig = None, max_steps: int = 64):
    """Strip leading terms that are powers of the primitive word ``h``.

    Returns ``(coefficients, s, steps)`` with ``g_elem = sum_k a_k h^k + s``
    and the leading word of ``s`` outside the centralizer of ``h`` (or ``s``
    empty above its floor).
    """
    h = tuple(h)
    if not h or primitive_root(h)[1] != 1:
        raise ValueError("h must be a nonempty primitive word")
    group = isinstance(g_elem, GroupSeries)
    if not g_elem:
        raise ValueError("cannot peel the zero element")
    cfg = cfg or (g_elem.order if group else OrderConfig(g_elem.nvars))
    coefficients = {}
    s = g_elem
    steps = 0
    while s:
        word, c = s.leading() if group else s.group_leading(cfg)
        k = _power_of(word, h, group)
        if k is None:
            break
        if steps >= max_steps:
            raise PeelBudgetExceeded(coefficients, s, steps)
        coefficients[k] = c
        if group:
            s = s - GroupSeries.monomial(word, c, s.field, s.order, EXACT)
        else:
            s = s - NcPoly.monomial(word, c, s.nvars, s.field)
        steps += 1
    return coefficients, s, steps


# ---------------------------------------------------------------------------
# witness monomial


class WitnessVerificationError(RuntimeError):
    """The constructed monomial disagrees with the brute-force expansion; a bug."""


def expand_Q(P_bar: NcPoly, m: int, n: int) -> NcPoly:
    """``P_bar(t^m, t^n + s)`` over the alphabet ``(t, s)``."""
    if m <= 0 or n <= 0:
        raise ValueError("m and n must be positive")
    F = P_bar.field
    t = NcPoly.var(0, 2, F)
    s = NcPoly.var(1, 2, F)
    return P_bar.substitute([t ** m, t ** n + s])


@dataclass
class WitnessTrace:
    z: tuple
    alphas: list
    betas: list
    I: int
    J: int
    N: int
    q: int
    u: tuple
    u_coefficient: FieldScalar
    special_case: bool
    m: int
    n: int

    @property
    def deg_t(self) -> int:
        return self.u.count(0)

    @property
    def deg_s(self) -> int:
        return self.u.count(1)

    @property
    def sigmas(self) -> list:
        return [b // 2 for b in self.betas]

    def to_dict(self):
        return {
            "z": format_monoid_word(self.z, XY),
            "alphas": self.alphas,
            "betas": self.betas,
            "I": self.I,
            "J": self.J,
            "N": self.N,
            "m": self.m,
            "n": self.n,
            "q": self.q,
            "u": format_monoid_word(self.u, TS),
            "u_coefficient": str(self.u_coefficient),
            "deg_t": self.deg_t,
            "deg_s": self.deg_s,
            "special_case": self.special_case,
        }


def _blocks(z):
    """Split ``z = x^a1 y^b1 ... x^ak y^bk`` (a1, bk may be 0)."""
    alphas, betas = [], []
    i = 0
    while i < len(z):
        a = b = 0
        while i < len(z) and z[i] == 0:
            a, i = a + 1, i + 1
        while i < len(z) and z[i] == 1:
            b, i = b + 1, i + 1
        alphas.append(a)
        betas.append(b)
    return alphas or [0], betas or [0]


def _replace(alphas, betas, m, n, t_first_block: bool):
    u = []
    for idx, (a, b) in enumerate(zip(alphas, betas)):
        u += [0] * (m * a)
        t_first = t_first_block and idx == 0
        for j in range(b):
            u += [0] * n if (j % 2 == 0) == t_first else [1]
    return tuple(u)


def _selection_key(w):
    # most y's first, then lexicographically largest with x >> y
    return (w.count(1), tuple(1 - g for g in w))


def witness_monomial(P_bar: NcPoly, m: int, n: int) -> WitnessTrace:
    """Build a monomial of ``Q = P_bar(t^m, t^n + s)`` with ``deg_s <= N // (m+n)``.

    ``P_bar`` must be nonzero, weighted-homogeneous for weights ``(m, n)``,
    with ``m < n`` and ``m`` not dividing ``n``.  The selected ``z`` has the
    most ``y``'s and is lexicographically largest among those; each ``y^b``
    block is replaced by alternating ``s, t^n, s, ...``.  If that leaves one
    ``s`` too many, the first block alternates starting from ``t^n`` instead.
    The result is checked against :func:`expand_Q`.
    """
    if P_bar.nvars != 2:
        raise ValueError("P_bar must be a polynomial in two variables")
    if P_bar.is_zero():
        raise ValueError("P_bar must be nonzero")
    if not (0 < m < n) or n % m == 0:
        raise ValueError(f"need 0 < m < n with m not dividing n, got m={m}, n={n}")
    if not P_bar.is_homogeneous((m, n)):
        raise ValueError("P_bar is not homogeneous for the weights (m, n)")
    N = P_bar.weighted_degree((m, n))
    q = N // (m + n)
    z = max(P_bar.terms, key=_selection_key)
    alphas, betas = _blocks(z)
    I, J = sum(alphas), sum(betas)
    u = _replace(alphas, betas, m, n, False)
    special = False
    if u.count(1) > q:
        special = True
        u = _replace(alphas, betas, m, n, True)
    coeff = FieldScalar(P_bar.field, P_bar.terms[z])
    Q = expand_Q(P_bar, m, n)
    got = Q.coefficient(u)
    if not got or got != coeff:
        raise WitnessVerificationError(
            f"u={format_monoid_word(u, TS)} has coefficient {got} in Q, expected {coeff}")
    if u.count(1) > q or u.count(0) + n * u.count(1) != N:
        raise WitnessVerificationError("degree accounting failed")
    return WitnessTrace(z, alphas, betas, I, J, N, q, u, coeff, special, m, n)


# ---------------------------------------------------------------------------
# proof replay


@dataclass
class PipelineTrace:
    status: str
    detail: str = ""
    swapped: bool = False
    m: int = None
    n: int = None
    lhs: int = None
    bound: Fraction = None
    commutator_degree: int = None
    floor: object = None
    root: tuple = None
    f_exponent: int = None
    g_exponent: int = None
    centralize_status: str = None
    centralize_steps: int = None
    conjugator: GroupSeries = None
    f_prime: GroupSeries = None
    g_prime: GroupSeries = None
    peel_coefficients: dict = None
    peel_steps: int = None
    peel_limit: int = None
    s: GroupSeries = None
    s_degree: int = None
    leading_part: NcPoly = None
    R_degree_formal: int = None
    R_degree_series: int = None
    witness: WitnessTrace = None
    u_degree: int = None
    checks: dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def chain(self):
        """The inequality chain ``lhs >= deg R >= deg u >= bound`` (complete traces)."""
        return (self.lhs, self.R_degree_formal, self.u_degree, self.bound)

    def to_dict(self):
        names = None
        d = {
            "status": self.status,
            "detail": self.detail,
            "swapped": self.swapped,
            "m": self.m,
            "n": self.n,
            "lhs": self.lhs,
            "bound": None if self.bound is None else _format_fraction(self.bound),
            "comm_deg": self.commutator_degree,
            "floor": None if self.floor is None else str(self.floor),
            "root": None if self.root is None else format_monoid_word(self.root),
            "f_exponent": self.f_exponent,
            "g_exponent": self.g_exponent,
            "centralize_status": self.centralize_status,
            "centralize_steps": self.centralize_steps,
            "peel_coefficients": None if self.peel_coefficients is None else
            {str(k): str(v) for k, v in sorted(self.peel_coefficients.items(), reverse=True)},
            "peel_steps": self.peel_steps,
            "peel_limit": self.peel_limit,
            "s": None if self.s is None else self.s.format(names, limit=8),
            "s_degree": self.s_degree,
            "P_bar": None if self.leading_part is None else self.leading_part.format(XY),
            "R_degree_formal": self.R_degree_formal,
            "R_degree_series": self.R_degree_series,
            "u_degree": self.u_degree,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "checks": self.checks,
        }
        return d


def swap_variables(P: NcPoly) -> NcPoly:
    return NcPoly({tuple(1 - g for g in w): c for w, c in P.terms.items()}, 2, P.field)


def _series_words_commute(series: GroupSeries, h) -> bool:
    return all(_power_of(w, h, True) is not None for w in series.terms)


def pipeline_trace(P: NcPoly, f: NcPoly, g: NcPoly, cfg: OrderConfig = None, floor="auto",
                   budget_centralize: int = 50, budget_peel: int = 64,
                   max_terms: int = DEFAULT_MAX_TERMS) -> PipelineTrace:
    """Replay the constructive proof on one instance.

    ``floor`` truncates the element being centralized; ``"auto"`` uses the
    highest degree floor that still leaves the leading term of ``s`` exact,
    ``deg[f,g] - deg g - 1``.  Direct verification stays authoritative; the
    trace reports ``complete`` or ``truncation-insufficient`` with a reason.
    """
    cfg = cfg or OrderConfig(f.nvars)
    hyp = check_hypotheses(f, g, cfg)
    if not hyp.all_satisfied:
        raise ValueError(f"hypotheses fail: {', '.join(hyp.failed())}")
    if P.is_constant():
        raise ValueError("P must be nonconstant")
    swapped = hyp.m > hyp.n
    if swapped:
        f, g, P = g, f, swap_variables(P)
    m, n = f.degree(), g.degree()
    report = verify_instance(P, f, g, cfg)
    trace = PipelineTrace("running", swapped=swapped, m=m, n=n, lhs=report.lhs_degree,
                          bound=report.bound, commutator_degree=report.commutator_degree)
    comm = report.commutator_degree
    cut = as_cut(comm - n - 1 if floor == "auto" else floor)
    trace.floor = cut
    trace.peel_limit = m + n - comm

    # (1) conjugate f into the centralizer of its leading word
    fs = GroupSeries.from_poly(f, cut, cfg)
    res = centralize(fs, budget_centralize, max_terms=max_terms)
    trace.centralize_status = res.status if res.complete else f"{res.status}/{res.reason}"
    trace.centralize_steps = len(res.steps)
    trace.conjugator = res.e
    v_f = f.group_leading(cfg)[0]
    h, q_f = primitive_root(v_f)
    trace.root, trace.f_exponent = h, q_f
    if not res.complete:
        trace.status, trace.detail = "truncation-insufficient", f"centralize {res.status} ({res.reason})"
        return trace
    f_prime = res.b
    trace.f_prime = f_prime
    trace.checks["f_prime_in_centralizer"] = _series_words_commute(f_prime, h)

    # (2) g' = e g e^-1
    gs = GroupSeries.from_poly(g, EXACT, cfg)
    e = res.e
    g_prime = e.mul(gs).mul(invert(e, max_terms=max_terms))
    trace.g_prime = g_prime
    if not g_prime:
        trace.status, trace.detail = "truncation-insufficient", "g' vanished above its floor"
        return trace
    v_g = from_monoid(g.group_leading(cfg)[0])
    trace.checks["leading_preserved"] = g_prime.leading()[0] == v_g and f_prime.leading()[0] == from_monoid(v_f)

    # (3) peel g' along h
    try:
        coeffs, s, steps = peel_decomposition(g_prime, h, cfg, budget_peel)
    except PeelBudgetExceeded as exc:
        trace.status, trace.detail = "truncation-insufficient", str(exc)
        return trace
    trace.peel_coefficients, trace.peel_steps, trace.s = coeffs, steps, s
    trace.g_exponent = max(coeffs) if coeffs else None
    trace.checks["peel_within_bound"] = steps <= trace.peel_limit
    if not s:
        trace.status, trace.detail = "truncation-insufficient", f"s vanished above {s.floor}"
        return trace
    trace.s_degree = s.degree()
    trace.checks["s_degree"] = trace.s_degree == comm - m

    # (4) leading parts and (5) the witness
    P_bar = P.leading_part((m, n))
    trace.leading_part = P_bar
    p = trace.g_exponent
    f_tilde = GroupSeries.monomial(*f_prime.leading(), f.field, cfg, EXACT)
    g_tilde = GroupSeries.monomial(group_pow(from_monoid(h), p), coeffs[p], f.field, cfg, EXACT) + s
    R = evaluate(P_bar, [f_tilde, g_tilde])
    trace.R_degree_series = R.degree()
    Q = expand_Q(P_bar, m, n)
    ds = trace.s_degree
    trace.R_degree_formal = max(w.count(0) + ds * w.count(1) for w in Q.terms)
    trace.witness = wit = witness_monomial(P_bar, m, n)
    trace.u_degree = wit.deg_t + wit.deg_s * ds

    # (6) the chain
    chk = trace.checks
    chk["lemma_on_degrees"] = trace.lhs >= trace.R_degree_formal
    if trace.R_degree_series is not None:
        chk["R_series_matches"] = trace.R_degree_series == trace.R_degree_formal
    chk["witness_le_R"] = trace.R_degree_formal >= trace.u_degree
    chk["accounting"] = trace.u_degree == wit.N + wit.deg_s * (comm - m - n)
    chk["u_ge_bound"] = trace.u_degree >= trace.bound
    chk["holds"] = trace.lhs >= trace.bound
    trace.status = "complete"
    return trace


# ---------------------------------------------------------------------------
# random instances


@dataclass(frozen=True)
class InstanceConfig:
    nvars: int = 2
    field: Field = QQ
    root_length_max: int = 3
    exponent_max: int = 6
    tail_terms: int = 2
    P_support_max: int = 3
    P_length_max: int = 3
    weight_budget: int = 40
    coefficient_max: int = 5


class InstanceGenerationError(RuntimeError):
    pass


def _coefficient(rng, F: Field, cmax: int):
    if F.characteristic:
        return rng.randrange(1, F.characteristic)
    return rng.choice([1, -1]) * rng.randint(1, cmax)


def _random_word(rng, nvars, length):
    return tuple(rng.randrange(nvars) for _ in range(length))


def _random_P(rng, cfg: InstanceConfig, m: int, n: int) -> NcPoly:
    F = cfg.field
    words = set()
    target = rng.randint(1, cfg.P_support_max)
    for _ in range(50 * target):
        if len(words) >= target:
            break
        w = _random_word(rng, 2, rng.randint(1, cfg.P_length_max))
        if word_weight(w, (m, n)) <= cfg.weight_budget:
            words.add(w)
    if not words:
        words.add((0,) if m <= n else (1,))
    if rng.random() < 0.25:
        words.add(())
    return NcPoly({w: _coefficient(rng, F, cfg.coefficient_max) for w in sorted(words)}, 2, F)


def _with_tail(rng, cfg: InstanceConfig, top_word, coeff):
    terms = {top_word: coeff}
    d = len(top_word)
    for _ in range(cfg.tail_terms):
        w = _random_word(rng, cfg.nvars, rng.randint(0, d - 1))
        terms[w] = _coefficient(rng, cfg.field, cfg.coefficient_max)
    return NcPoly(terms, cfg.nvars, cfg.field)


def _non_dividing_pair(rng, top):
    pairs = [(a, b) for a in range(2, top + 1) for b in range(2, top + 1)
             if a != b and a % b and b % a]
    if not pairs:
        raise InstanceGenerationError(f"exponent_max={top} admits no non-dividing pair")
    return rng.choice(pairs)


def random_instance(config: InstanceConfig = InstanceConfig(), seed: int = 0, leading: str = "dependent",
                    retries: int = 200):
    """Deterministic ``(P, f, g)`` for a seed.

    ``leading="dependent"`` (the theorem's setting) builds ``f = c*h^a + tail``,
    ``g = d*h^b + tail`` for a primitive ``h`` and non-dividing ``a, b``, and
    retries until :func:`check_hypotheses` passes.  ``leading="independent"``
    draws leading words that do not commute.
    """
    rng = random.Random(seed)
    F = config.field
    order = OrderConfig(config.nvars)
    for _ in range(retries):
        if leading == "dependent":
            while True:
                h = _random_word(rng, config.nvars, rng.randint(1, config.root_length_max))
                if primitive_root(h)[1] == 1:
                    break
            a, b = _non_dividing_pair(rng, config.exponent_max)
            f = _with_tail(rng, config, h * a, _coefficient(rng, F, config.coefficient_max))
            g = _with_tail(rng, config, h * b, _coefficient(rng, F, config.coefficient_max))
            hyp = check_hypotheses(f, g, order)
            ok = hyp.all_satisfied
        elif leading == "independent":
            u = _random_word(rng, config.nvars, rng.randint(1, config.root_length_max * 2))
            v = _random_word(rng, config.nvars, rng.randint(1, config.root_length_max * 2))
            if commutes(u, v):
                continue
            f = _with_tail(rng, config, u, _coefficient(rng, F, config.coefficient_max))
            g = _with_tail(rng, config, v, _coefficient(rng, F, config.coefficient_max))
            hyp = check_hypotheses(f, g, order)
            ok = (hyp.f_nonconstant and hyp.g_nonconstant and not hyp.leading_dependent
                  and f.group_leading(order)[0] == u and g.group_leading(order)[0] == v)
        else:
            raise ValueError(f"unknown leading mode {leading!r}")
        if ok:
            P = _random_P(rng, config, hyp.m, hyp.n)
            if not P.is_constant():
                return P, f, g
    raise InstanceGenerationError(f"no valid instance after {retries} attempts (seed {seed})")


CAMPAIGN_FIELDS = (QQ, GF(2), GF(3), GF(5))


def campaign(count: int, seed: int = 0, config: InstanceConfig = InstanceConfig(), fields=CAMPAIGN_FIELDS):
    """Yield ``(index, P, f, g, report)`` for ``count`` seeded instances.

    Instance ``i`` uses seed ``seed + i`` and field ``fields[i % len(fields)]``.
    """
    for i in range(count):
        cfg = InstanceConfig(**{**asdict(config), "field": fields[i % len(fields)]}) if fields else config
        P, f, g = random_instance(cfg, seed + i)
        yield i, P, f, g, verify_instance(P, f, g)


def summarize(reports) -> dict:
    reports = list(reports)
    slacks = [r.slack for r in reports if r.slack is not None]
    failures = sum(1 for r in reports if not r.holds)
    return {
        "count": len(reports),
        "holds": len(reports) - failures,
        "failures": failures,
        "min_slack": None if not slacks else _format_fraction(Fraction(min(slacks))),
    }


def sharpness_instance(n: int, m: int, k: int, field: Field = QQ):
    """``f = x^n``, ``g = x^m + y``, ``P = [x, y]^k``."""
    x = NcPoly.var(0, 2, field)
    y = NcPoly.var(1, 2, field)
    return commutator(x, y) ** k, x ** n, x ** m + y


def sharpness_table(n_values, m_values, k_values, fields=(QQ,)):
    """Rows ``(field, n, m, k, lhs, bound, expected)`` for the sharpness family."""
    rows = []
    for F in fields:
        for n in n_values:
            for m in m_values:
                if n == m:
                    continue
                for k in k_values:
                    P, f, g = sharpness_instance(n, m, k, F)
                    rep = verify_instance(P, f, g)
                    rows.append({"field": F.tag, "n": n, "m": m, "k": k, "lhs": rep.lhs_degree,
                                 "bound": rep.bound, "expected": k * (n + 1), "report": rep})
    return rows
