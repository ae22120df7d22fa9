"""Binding template labels to real teams.

A template schedule talks about labels 0..n-1 where labels (2i-2, 2i-1)
form the i-th super-team slot.  A TeamOrdering assigns matching edge
sigma_i to slot i and orients it with bit pi_i.  Because the total distance
of any binding is a fixed linear form over label-pair travel counts, the
conditional expectation under random orderings can be evaluated exactly,
which drives both the derandomization and cheap swap deltas.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .instance import Instance
from .matching import Matching
from .schedule import Schedule, total_distance

Chain = list[Fraction]


@dataclass(frozen=True)
class TeamOrdering:
    """sigma: slot -> matching-edge index; pi: orientation bit per slot."""

    sigma: tuple[int, ...]
    pi: tuple[int, ...]


@dataclass(frozen=True)
class TravelCoefficients:
    """c[a][b] = number of direct travels between the homes of labels a, b."""

    n: int
    c: np.ndarray


def random_ordering(m: int, seed: int) -> TeamOrdering:
    """Uniform permutation and orientation bits from a seeded generator."""
    rng = random.Random(seed)
    sigma = list(range(m))
    rng.shuffle(sigma)
    pi = tuple(rng.randrange(2) for _ in range(m))
    return TeamOrdering(sigma=tuple(sigma), pi=pi)


def extract_coefficients(template: Schedule) -> TravelCoefficients:
    n = template.n
    c = np.zeros((n, n), dtype=np.int64)
    for team in range(n):
        venue = team
        for d in range(template.days):
            nxt = template.opponent(team, d) if template.is_away(team, d) else team
            if nxt != venue:
                c[venue, nxt] += 1
                c[nxt, venue] += 1
            venue = nxt
        if venue != team:
            c[venue, team] += 1
            c[team, venue] += 1
    return TravelCoefficients(n=n, c=c)


def binding_vector(matching: Matching, ordering: TeamOrdering) -> list[int]:
    """bind[label] = real team; slot i gets edge sigma_i oriented by pi_i."""
    bind = [0] * (2 * len(ordering.sigma))
    for i, (edge_idx, bit) in enumerate(zip(ordering.sigma, ordering.pi)):
        a, b = matching.pairs[edge_idx]
        first, second = (a, b) if bit == 0 else (b, a)
        bind[2 * i] = first
        bind[2 * i + 1] = second
    return bind


def bind_template(template: Schedule, matching: Matching, ordering: TeamOrdering) -> Schedule:
    """Rename template labels to real teams according to the ordering."""
    n = template.n
    bind = binding_vector(matching, ordering)
    table = np.zeros_like(template.table)
    for label in range(n):
        team = bind[label]
        for d in range(template.days):
            e = int(template.table[label, d])
            opp = bind[abs(e) - 1]
            table[team, d] = (opp + 1) if e > 0 else -(opp + 1)
    return Schedule(n=n, table=table)


def coefficient_total(coeffs: TravelCoefficients, inst: Instance, bind: list[int]) -> object:
    """Total distance of a binding straight from the linear form."""
    perm = np.array(bind)
    d_perm = inst.dist[np.ix_(perm, perm)]
    tot = (coeffs.c * d_perm).sum()
    val = tot.item() / 2
    return int(val) if inst.integral else val


# ---------------------------------------------------------------------------
# Derandomization by conditional expectations (exact rational arithmetic).
# ---------------------------------------------------------------------------

def _super_aggregates(coeffs: TravelCoefficients):
    """Collapse label coefficients to super-team slots.

    CS[i][j] sums c over the four cross label pairs of slots i, j; CP[i] is
    the coefficient between a slot's own two labels.
    """
    n = coeffs.n
    m = n // 2
    c = coeffs.c
    CS = np.zeros((m, m), dtype=np.int64)
    CP = np.zeros(m, dtype=np.int64)
    for i in range(m):
        CP[i] = c[2 * i, 2 * i + 1]
        for j in range(i + 1, m):
            block = c[2 * i : 2 * i + 2, 2 * j : 2 * j + 2].sum()
            CS[i, j] = CS[j, i] = block
    return CS, CP


def _edge_tables(inst: Instance, matching: Matching):
    m = inst.n // 2
    pairs = matching.pairs
    PD = [inst.d(a, b) for a, b in pairs]
    SD = [[0] * m for _ in range(m)]
    for e in range(m):
        for f in range(e + 1, m):
            a, b = pairs[e]
            x, y = pairs[f]
            s = inst.d(a, x) + inst.d(a, y) + inst.d(b, x) + inst.d(b, y)
            SD[e][f] = SD[f][e] = s
    return SD, PD


def _sigma_expectation(CS, CP, SD, PD, assigned: list[int], free: list[int]) -> Fraction:
    """E[W | slots 0..s-1 fixed to `assigned`] as an exact rational."""
    m = len(CP)
    s = len(assigned)
    k = len(free)
    total = Fraction(0)

    free_pd_sum = sum(PD[e] for e in free)
    sd_row_free = {e: sum(SD[e][f] for f in free) for e in assigned}
    sd_free_free = sum(SD[e][f] for e in free for f in free)  # ordered pairs, e != f

    # Pair terms (scaled by 4 to share one denominator with cross terms).
    for i in range(m):
        if i < s:
            total += 4 * int(CP[i]) * PD[assigned[i]]
        else:
            total += Fraction(4 * int(CP[i]) * free_pd_sum, k)

    # Cross terms.
    cs_fixed_free = [int(CS[i, s:].sum()) for i in range(s)]
    cs_free_free = int(CS[s:, s:].sum()) // 2 if k > 1 else 0
    for i in range(s):
        for j in range(i + 1, s):
            total += int(CS[i, j]) * SD[assigned[i]][assigned[j]]
    for i in range(s):
        if k:
            total += Fraction(cs_fixed_free[i] * sd_row_free[assigned[i]], k)
    if k > 1:
        total += Fraction(cs_free_free * sd_free_free, k * (k - 1))
    return total / 4


def _sigma_step(CS, CP, SD, PD, assigned, free):
    """Exact numerators of E[W | prefix + candidate] for every free edge.

    All candidates of one step share the denominator 4*k'*(k'-1) (with the
    degenerate factors clamped to one), so integer comparison picks the
    argmin exactly.  Returns (numerators as int64 array, denominator).
    """
    s = len(assigned)
    k = len(free)
    kp = k - 1
    f1 = max(kp, 1)
    f2 = max(kp - 1, 1)
    den = 4 * f1 * f2

    idx = np.array(assigned, dtype=np.intp)
    fre = np.array(free, dtype=np.intp)
    sd_af = SD[np.ix_(idx, fre)] if s else np.zeros((0, k), dtype=np.int64)
    row_f = SD[:, fre].sum(axis=1)  # over the current free set

    cp_fix = int(4 * (CP[:s] * np.array([PD[e] for e in assigned], dtype=np.int64)).sum()) if s else 0
    a_const = cp_fix
    if s > 1:
        sd_aa = SD[np.ix_(idx, idx)]
        a_const += int((np.triu(CS[:s, :s], 1) * np.triu(sd_aa, 1)).sum())

    pd_f = np.array([PD[e] for e in free], dtype=np.int64)
    pd_sum = int(pd_f.sum())
    cp_s = int(CP[s])
    cp_free_sum = int(CP[s + 1 :].sum())

    # Plain terms (exact integers after fixing slot s to each candidate).
    b_vec = CS[:s, s] @ sd_af if s else np.zeros(k, dtype=np.int64)
    exact = a_const + b_vec + 4 * cp_s * pd_f

    # Terms averaged over the remaining free edges (denominator k').
    csff = CS[:s, s + 1 :].sum(axis=1) if s else np.zeros(0, dtype=np.int64)
    c_vec = (csff @ row_f[idx]) - (csff @ sd_af) if s else np.zeros(k, dtype=np.int64)
    cs_s_free = int(CS[s, s + 1 :].sum())
    d_vec = cs_s_free * row_f[fre]
    pair_free = 4 * cp_free_sum * (pd_sum - pd_f)
    avg1 = c_vec + d_vec + pair_free

    # Free-free average (denominator k'(k'-1)).
    cs_ff_rest = int(np.triu(CS[s + 1 :, s + 1 :], 1).sum())
    ff_total = int((SD[np.ix_(fre, fre)]).sum())
    ff_vec = cs_ff_rest * (ff_total - 2 * row_f[fre])

    if kp >= 2:
        nums = exact * (f1 * f2) + avg1 * f2 + ff_vec
    elif kp == 1:
        nums = exact * f1 + avg1
    else:
        nums = exact
    return nums, den


def _pi_expectation_num(coeffs, inst, endpoints, bits: list[int]) -> int:
    """4 * E[W | sigma fixed, orientation bits 0..s-1 fixed], an integer."""
    m = len(endpoints)
    c = coeffs.c
    s = len(bits)

    def teams(i):
        a, b = endpoints[i]
        return (a, b) if bits[i] == 0 else (b, a)

    total = 0
    for i in range(m):
        total += 4 * int(c[2 * i, 2 * i + 1]) * inst.d(*endpoints[i])
        for j in range(i + 1, m):
            block = c[2 * i : 2 * i + 2, 2 * j : 2 * j + 2]
            if not block.any():
                continue
            if i < s and j < s:
                ti = teams(i)
                tj = teams(j)
                for ri in range(2):
                    for rj in range(2):
                        total += 4 * int(block[ri, rj]) * inst.d(ti[ri], tj[rj])
            elif i < s:
                ti = teams(i)
                x, y = endpoints[j]
                for ri in range(2):
                    row = int(block[ri, 0] + block[ri, 1])
                    total += 2 * row * (inst.d(ti[ri], x) + inst.d(ti[ri], y))
            elif j < s:
                tj = teams(j)
                x, y = endpoints[i]
                for rj in range(2):
                    col = int(block[0, rj] + block[1, rj])
                    total += 2 * col * (inst.d(x, tj[rj]) + inst.d(y, tj[rj]))
            else:
                a, b = endpoints[i]
                x, y = endpoints[j]
                sd = inst.d(a, x) + inst.d(a, y) + inst.d(b, x) + inst.d(b, y)
                total += int(block.sum()) * sd
    return total


def derandomize(
    template: Schedule,
    coeffs: TravelCoefficients,
    inst: Instance,
    matching: Matching,
    with_chain: bool = False,
):
    """Fix sigma then pi greedily so the conditional expectation never rises.

    Returns the ordering, or (ordering, chain of expectations) when
    `with_chain` is set; chain values are exact Fractions of E[W] after
    each of the 2m fixing steps (entry 0 is the unconditioned expectation).
    """
    m = inst.n // 2
    CS, CP = _super_aggregates(coeffs)
    SD_list, PD = _edge_tables(inst, matching)
    SD = np.array(SD_list, dtype=np.int64)

    assigned: list[int] = []
    free = list(range(m))
    chain: Chain = [_sigma_expectation(CS, CP, SD_list, PD, assigned, free)]
    for _ in range(m):
        nums, den = _sigma_step(CS, CP, SD, PD, assigned, free)
        pick = int(np.argmin(nums))
        chain.append(Fraction(int(nums[pick]), den))
        assigned.append(free[pick])
        free.pop(pick)

    sigma = tuple(assigned)
    endpoints = [matching.pairs[sigma[i]] for i in range(m)]
    bits: list[int] = []
    for _ in range(m):
        cand = [(_pi_expectation_num(coeffs, inst, endpoints, bits + [b]), b) for b in (0, 1)]
        num, b = min(cand, key=lambda t: t[0])
        bits.append(b)
        chain.append(Fraction(num, 4))

    ordering = TeamOrdering(sigma=sigma, pi=tuple(bits))
    return (ordering, chain) if with_chain else ordering


# ---------------------------------------------------------------------------
# Swap local search.
# ---------------------------------------------------------------------------

def _swap_slots_delta(c, dist, bind, new_bind_arr, i: int, j: int):
    """Distance change from swapping the super-teams in slots i and j.

    Sums coefficient-weighted distance changes over the four touched labels;
    label pairs with both ends touched are double counted by the row sums
    and corrected once (they do move: mixed pairs bind different team pairs,
    and each slot's own-pair coefficient binds the other edge afterwards).
    """
    labels = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1)
    np.copyto(new_bind_arr, bind)
    new_bind_arr[[labels[0], labels[1]]] = bind[[labels[2], labels[3]]]
    new_bind_arr[[labels[2], labels[3]]] = bind[[labels[0], labels[1]]]

    rows = c[labels, :]
    old_d = dist[np.ix_(bind[labels, None].ravel(), bind)]
    new_d = dist[np.ix_(new_bind_arr[labels, None].ravel(), new_bind_arr)]
    delta = int((rows * (new_d - old_d)).sum())
    for ai in range(4):
        for bi in range(ai + 1, 4):
            a, b = labels[ai], labels[bi]
            if c[a, b]:
                delta -= int(c[a, b]) * (
                    int(dist[new_bind_arr[a], new_bind_arr[b]]) - int(dist[bind[a], bind[b]])
                )
    return delta


def _flip_pair_delta(c, dist, bind, new_bind_arr, i: int):
    """Distance change from swapping the two teams inside slot i."""
    a, b = 2 * i, 2 * i + 1
    np.copyto(new_bind_arr, bind)
    new_bind_arr[a], new_bind_arr[b] = bind[b], bind[a]
    rows = c[(a, b), :]
    old_d = dist[np.ix_(bind[(a, b), None].ravel(), bind)]
    new_d = dist[np.ix_(new_bind_arr[(a, b), None].ravel(), new_bind_arr)]
    # The (a, b) pair itself is unchanged (same two teams) but double counted
    # by the row sums either way, with zero net contribution.
    return int((rows * (new_d - old_d)).sum())


def _ordering_from_bind(matching: Matching, bind: list[int]) -> TeamOrdering:
    where = {}
    for idx, (a, b) in enumerate(matching.pairs):
        where[frozenset((a, b))] = idx
    sigma = []
    pi = []
    for i in range(len(bind) // 2):
        first, second = bind[2 * i], bind[2 * i + 1]
        idx = where[frozenset((first, second))]
        sigma.append(idx)
        pi.append(0 if matching.pairs[idx][0] == first else 1)
    return TeamOrdering(sigma=tuple(sigma), pi=tuple(pi))


def swap_super_teams_pass(
    ordering: TeamOrdering,
    template: Schedule,
    coeffs: TravelCoefficients,
    inst: Instance,
    matching: Matching,
    debug_check: bool = False,
):
    """One full first-improvement sweep over all slot pairs, repeated while
    a sweep improves; returns (ordering, improved)."""
    m = len(ordering.sigma)
    bind = np.array(binding_vector(matching, ordering))
    scratch = np.empty_like(bind)
    dist = inst.dist
    c = coeffs.c
    improved_any = False
    improved = True
    while improved:
        improved = False
        for i in range(m):
            for j in range(i + 1, m):
                delta = _swap_slots_delta(c, dist, bind, scratch, i, j)
                if debug_check:
                    old = coefficient_total(coeffs, inst, list(bind))
                    new = coefficient_total(coeffs, inst, list(scratch))
                    assert new - old == delta, "swap delta disagrees with recomputation"
                if delta < 0:
                    bind, scratch = scratch.copy(), scratch
                    improved = True
                    improved_any = True
    return _ordering_from_bind(matching, list(bind)), improved_any


def swap_within_pass(
    ordering: TeamOrdering,
    template: Schedule,
    coeffs: TravelCoefficients,
    inst: Instance,
    matching: Matching,
    debug_check: bool = False,
):
    """First-improvement sweep flipping team order inside each super-team."""
    m = len(ordering.sigma)
    bind = np.array(binding_vector(matching, ordering))
    scratch = np.empty_like(bind)
    dist = inst.dist
    c = coeffs.c
    improved_any = False
    improved = True
    while improved:
        improved = False
        for i in range(m):
            delta = _flip_pair_delta(c, dist, bind, scratch, i)
            if debug_check:
                old = coefficient_total(coeffs, inst, list(bind))
                new = coefficient_total(coeffs, inst, list(scratch))
                assert new - old == delta, "flip delta disagrees with recomputation"
            if delta < 0:
                bind, scratch = scratch.copy(), scratch
                improved = True
                improved_any = True
    return _ordering_from_bind(matching, list(bind)), improved_any


def polish(ordering, template, coeffs, inst, matching):
    """Alternate the two swapping rules until neither improves."""
    while True:
        ordering, a = swap_super_teams_pass(ordering, template, coeffs, inst, matching)
        ordering, b = swap_within_pass(ordering, template, coeffs, inst, matching)
        if not (a or b):
            return ordering


def run_rounds(
    inst: Instance,
    template: Schedule,
    matching: Matching,
    x: int,
    base_seed: int = 0,
    lb=None,
    include_derandomized: bool = False,
):
    """x random restarts, each polished by the two swap rules; best wins.

    Returns (ordering, schedule, DistanceReport).
    """
    if x < 1:
        raise ValueError("round count must be >= 1")
    m = inst.n // 2
    coeffs = extract_coefficients(template)
    candidates = []
    for r in range(x):
        candidates.append(random_ordering(m, base_seed + r))
    if include_derandomized:
        candidates.append(derandomize(template, coeffs, inst, matching))

    best = None
    best_total = None
    for ordering in candidates:
        polished = polish(ordering, template, coeffs, inst, matching)
        total = coefficient_total(coeffs, inst, binding_vector(matching, polished))
        if best_total is None or total < best_total:
            best_total = total
            best = polished
    schedule = bind_template(template, matching, best)
    report = total_distance(schedule, inst, lb=lb)
    return best, schedule, report
