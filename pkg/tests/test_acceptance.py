"""Acceptance criteria, one test each.  Every test logs a PASS/FAIL line that
is repeated in the "acceptance criteria" section of the pytest summary."""

import random
import time
from itertools import permutations

from ncdegree.estimate import (
    CAMPAIGN_FIELDS,
    InstanceConfig,
    campaign,
    expand_Q,
    pipeline_trace,
    random_instance,
    sharpness_instance,
    sharpness_table,
    summarize,
    verify_instance,
    witness_monomial,
)
from ncdegree.fields import GF, QQ
from ncdegree.freealg import NcPoly, word_weight
from ncdegree.mnseries import (
    Cut,
    GroupSeries,
    bergman_step,
    centralize,
    evaluate,
    initial_state,
    invert,
)
from ncdegree.parsing import parse_poly
from ncdegree.words import (
    OrderConfig,
    abelian_key,
    all_monoid_words,
    commutes,
    concat,
    format_group_word,
    group_compare,
    group_mul,
    group_reduce,
    primitive_root,
)

CFG2 = OrderConfig(2)
CFG3 = OrderConfig(3)
FIELDS4 = [QQ, GF(2), GF(3), GF(5)]


def _coeff(rng, F):
    return rng.randrange(1, F.characteristic) if F.characteristic else rng.choice([-3, -2, -1, 1, 2, 3])


# 1 ------------------------------------------------------------------------
def test_criterion_01_sharpness_grid(acceptance_log):
    start = time.perf_counter()
    rows = sharpness_table(range(2, 6), range(2, 6), range(1, 4), (QQ, GF(2)))
    elapsed = time.perf_counter() - start
    bad = [r for r in rows if not (r["lhs"] == r["bound"] == r["expected"])]
    ok = len(rows) == 2 * 12 * 3 and not bad and elapsed < 10
    acceptance_log(1, "sharpness grid lhs = bound = k(n+1)", ok,
                   f"{len(rows) - len(bad)}/{len(rows)} cells exact in {elapsed:.2f}s")
    assert ok, bad[:3]


# 2 ------------------------------------------------------------------------
def test_criterion_02_soundness_campaign(acceptance_log):
    start = time.perf_counter()
    results = list(campaign(1000, seed=0, fields=CAMPAIGN_FIELDS))
    elapsed = time.perf_counter() - start
    reports = [r for *_, r in results]
    summary = summarize(reports)
    valid = all(r.hypothesis.all_satisfied for r in reports)
    fields_seen = {P.field for _, P, *_ in results}
    ok = valid and summary["holds"] == 1000 and elapsed < 300 and fields_seen == set(FIELDS4)
    acceptance_log(2, "1000-instance soundness campaign", ok,
                   f"holds {summary['holds']}/1000, min slack {summary['min_slack']}, {elapsed:.1f}s")
    assert ok, summary


# 3 ------------------------------------------------------------------------
def test_criterion_03_bergman_walkthrough(acceptance_log):
    a = GroupSeries.from_poly(parse_poly("x^2 + x*y"), -10, CFG2)
    state = initial_state(a)
    decreasing = True
    while not state.done and state.step_count < 50:
        prev = state.residual_lead
        state, _ = bergman_step(state, a)
        if state.residual_lead is not None:
            decreasing &= group_compare(state.residual_lead, prev, CFG2) < 0
            assert decreasing, "residual lead failed to decrease"
    res = centralize(a, 50)
    b_ok = res.b.terms == {((0, 2),): 1}
    ok = decreasing and b_ok and res.status == "complete"
    last = format_group_word(res.steps[-1].next_lead) if res.steps else None
    acceptance_log(3, "centralize(x^2 + x*y) completes with b = x^2", ok,
                   f"status {res.status}/{res.reason} after {len(res.steps)} steps, b = x^2: {b_ok}, "
                   f"leads strictly decreasing: {decreasing}, last lead {last}")
    assert decreasing and b_ok
    assert res.status == "complete", "residual x^-(2k-1)*y*x^(2k) never vanishes; see the decision ledger"


# 4 ------------------------------------------------------------------------
def _random_homogeneous(rng, F):
    d = rng.randint(1, 4)
    words = {tuple(rng.randrange(2) for _ in range(d)) for _ in range(rng.randint(1, 4))}
    return NcPoly({w: _coeff(rng, F) for w in words}, 2, F)


def test_criterion_04_homogeneity(acceptance_log):
    rng = random.Random(4)
    completed = truncated = 0
    violations = []
    for i in range(100):
        F = FIELDS4[i % 4]
        p = _random_homogeneous(rng, F)
        a = GroupSeries.from_poly(p, p.degree() - 1, CFG2)
        state = initial_state(a)
        while not state.done and state.step_count < 20:
            prev = state.residual_lead
            state, _ = bergman_step(state, a)
            if state.residual_lead is not None and group_compare(state.residual_lead, prev, CFG2) >= 0:
                violations.append((i, "progress"))
        res = centralize(a, 20)
        if any(abelian_key(w, CFG2)[0] != 0 for w in res.e.terms):
            violations.append((i, "e degree"))
        if res.complete:
            completed += 1
            u, c = a.leading()
            if res.b.terms != {u: c.value}:
                violations.append((i, "b"))
        else:
            truncated += 1
    ok = not violations
    acceptance_log(4, "homogeneity preservation", ok,
                   f"{completed} completed, {truncated} truncated, {len(violations)} violations")
    assert ok, violations[:5]


# 5 ------------------------------------------------------------------------
def _random_poly(rng, F, max_terms, max_len, min_len=0):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[tuple(rng.randrange(2) for _ in range(rng.randint(min_len, max_len)))] = _coeff(rng, F)
    return NcPoly(terms, 2, F)


def _random_unit_series(rng, F):
    terms = {(): 1}
    for _ in range(rng.randint(1, 3)):
        while True:
            w = group_reduce((rng.randrange(2), rng.choice([1, -1])) for _ in range(rng.randint(1, 3)))
            if w and group_compare(w, (), CFG2) < 0:
                break
        terms[w] = _coeff(rng, F)
    return GroupSeries(terms, F, CFG2)


def test_criterion_05_conjugation_substitution(acceptance_log):
    rng = random.Random(5)
    mismatches, compared_terms, vacuous = [], 0, 0
    for i in range(100):
        F = FIELDS4[i % 4]
        P = _random_poly(rng, F, 3, 2, 1)
        f, g = _random_poly(rng, F, 2, 2, 1), _random_poly(rng, F, 2, 2, 1)
        t = _random_unit_series(rng, F)
        t_inv = invert(t, cut=Cut.degree(-6))
        fs, gs = GroupSeries.from_poly(f, None, CFG2), GroupSeries.from_poly(g, None, CFG2)
        lhs = evaluate(P, [t.mul(fs).mul(t_inv), t.mul(gs).mul(t_inv)])
        rhs = t.mul(GroupSeries.from_poly(P.substitute([f, g]), None, CFG2)).mul(t_inv)
        common = max(lhs.floor, rhs.floor)
        L, R = lhs.truncate(common), rhs.truncate(common)
        if L.terms != R.terms:
            mismatches.append(i)
        compared_terms += len(L.terms)
        vacuous += not L.terms and not P.substitute([f, g]).is_zero()
    ok = not mismatches and vacuous == 0
    acceptance_log(5, "conjugation-substitution identity", ok,
                   f"100 instances, {compared_terms} terms compared, {len(mismatches)} mismatches, "
                   f"{vacuous} vacuous")
    assert ok, mismatches[:5]


# 6 ------------------------------------------------------------------------
WITNESS_PAIRS = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]


def _random_weighted_homogeneous(rng, F, m, n):
    seed_word = tuple(rng.randrange(2) for _ in range(rng.randint(1, 5)))
    N = word_weight(seed_word, (m, n))
    pool = [w for w in all_monoid_words(2, 5, 1) if word_weight(w, (m, n)) == N and w != seed_word]
    words = [seed_word] + rng.sample(pool, min(len(pool), rng.randint(0, 5)))
    return NcPoly({w: _coeff(rng, F) for w in words}, 2, F)


def test_criterion_06_witness_oracle(acceptance_log):
    rng = random.Random(6)
    bad, special = [], 0
    for i in range(500):
        F = FIELDS4[i % 4]
        m, n = WITNESS_PAIRS[i % len(WITNESS_PAIRS)]
        P_bar = _random_weighted_homogeneous(rng, F, m, n)
        assert 0 < len(P_bar) <= 6
        w = witness_monomial(P_bar, m, n)
        Q = expand_Q(P_bar, m, n)
        c = Q.coefficient(w.u)
        good = (bool(c) and c == w.u_coefficient and w.deg_s <= w.N // (m + n)
                and w.N == w.deg_t + n * w.deg_s)
        special += w.special_case
        if not good:
            bad.append((i, P_bar, m, n))
    ok = not bad
    acceptance_log(6, "witness monomial vs brute-force expansion", ok,
                   f"500 cases ({special} via the special case), {len(bad)} failures")
    assert ok, bad[:3]


# 7 ------------------------------------------------------------------------
def test_criterion_07_peeling_bound(acceptance_log):
    instances = [random_instance(InstanceConfig(field=FIELDS4[s % 4]), s) for s in range(80)]
    instances += [sharpness_instance(n, m, k) for n in range(2, 6) for m in range(2, 6)
                  if n != m and n % m and m % n for k in (1, 2)]
    instances.append(tuple(parse_poly(s) for s in ("[x,y]", "x^2", "x^3+y")))
    completed, violations = 0, []
    for idx, (P, f, g) in enumerate(instances):
        t = pipeline_trace(P, f, g)
        if t.complete:
            completed += 1
            limit = f.degree() + g.degree() - t.commutator_degree
            if t.peel_steps > limit:
                violations.append((idx, t.peel_steps, limit))
    ok = completed > 0 and not violations
    acceptance_log(7, "peeling steps <= deg(fg) - deg[f,g]", ok,
                   f"{completed}/{len(instances)} traces completed, {len(violations)} violations")
    assert ok, violations[:5]


# 8 ------------------------------------------------------------------------
def _random_group_word(rng, nvars=3, max_len=8):
    return group_reduce((rng.randrange(nvars), rng.choice([1, -1])) for _ in range(rng.randint(0, max_len)))


def test_criterion_08_order_laws(acceptance_log):
    rng = random.Random(8)
    violations = []
    for i in range(10_000):
        a, b, c = (_random_group_word(rng) for _ in range(3))
        words = (a, b, c)
        cmp = {(p, q): group_compare(p, q, CFG3) for p in words for q in words}
        for (p, q), s in cmp.items():
            if s not in (-1, 0, 1) or (s == 0) != (p == q):
                violations.append(("totality", i))
            if cmp[(q, p)] != -s:
                violations.append(("antisymmetry", i))
        for p, q, r in permutations(words):
            if cmp[(p, q)] <= 0 and cmp[(q, r)] <= 0 and cmp[(p, r)] > 0:
                violations.append(("transitivity", i))
        s = cmp[(a, b)]
        if group_compare(group_mul(c, a), group_mul(c, b), CFG3) != s:
            violations.append(("left invariance", i))
        if group_compare(group_mul(a, c), group_mul(b, c), CFG3) != s:
            violations.append(("right invariance", i))
        da, db = abelian_key(a, CFG3)[0], abelian_key(b, CFG3)[0]
        if da != db and s != (1 if da > db else -1):
            violations.append(("degree extension", i))
    ok = not violations
    acceptance_log(8, "group order laws on 10^4 triples", ok, f"{len(violations)} violations")
    assert ok, violations[:5]


# 9 ------------------------------------------------------------------------
def test_criterion_09_word_combinatorics(acceptance_log):
    words = list(all_monoid_words(2, 6, 1))
    discrepancies = 0
    for u in words:
        ru = primitive_root(u)[0]
        for v in words:
            a = commutes(u, v)
            b = ru == primitive_root(v)[0]
            c = concat(u, v) == concat(v, u)
            discrepancies += not (a == b == c)
    ok = discrepancies == 0
    acceptance_log(9, "commutes <=> equal primitive roots <=> uv = vu", ok,
                   f"{len(words) ** 2} pairs, {discrepancies} discrepancies")
    assert ok


# 10 -----------------------------------------------------------------------
def test_criterion_10_independent_leading(acceptance_log):
    bad = []
    for s in range(200):
        P, f, g = random_instance(InstanceConfig(field=FIELDS4[s % 4]), s, leading="independent")
        r = verify_instance(P, f, g)
        if r.hypothesis.leading_dependent or r.lhs_degree != r.weighted_N:
            bad.append(s)
    ok = not bad
    acceptance_log(10, "independent leading words give lhs = w_(m,n)(P)", ok,
                   f"{200 - len(bad)}/200 exact")
    assert ok, bad[:5]
