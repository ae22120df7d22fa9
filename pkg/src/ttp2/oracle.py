"""Ground-truth generators and the exhaustive solver for tiny team counts."""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .instance import Instance
from .schedule import Schedule, games_to_schedule

BRUTE_FORCE_LIMIT = 6


def tight_instance(n: int) -> Instance:
    """Zero distance on the designated matching {(0,1),(2,3),...}, one elsewhere.

    The independent lower bound of this instance is n*(n-2).
    """
    if n < 4 or n % 2:
        raise DomainError(f"n must be even >= 4, got {n}")
    dist = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(dist, 0)
    for k in range(0, n, 2):
        dist[k, k + 1] = dist[k + 1, k] = 0
    return Instance(n=n, dist=dist)


def random_metric_instance(n: int, seed: int) -> Instance:
    """Integer distances from random points in the plane.

    Euclidean distances are rounded up; the ceiling preserves the triangle
    inequality exactly, so the result is always metric.
    """
    if n < 4 or n % 2:
        raise DomainError(f"n must be even >= 4, got {n}")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, 1000.0, size=(n, 2))
    dist = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            d = math.ceil(math.hypot(pts[i, 0] - pts[j, 0], pts[i, 1] - pts[j, 1]))
            dist[i, j] = dist[j, i] = d
    return Instance(n=n, dist=dist)


def _trip_cover_tables(inst: Instance):
    """Per-team DP: cheapest cover of an away-venue subset by 1/2-stop trips.

    cover[i][mask] is the minimum travel for team i to play the away set
    `mask` (bits over the other teams, sorted) in road trips of length one
    or two, starting and ending at home.  Only the trip structure forced by
    bounded-by-2 is used, so the value is a valid lower bound regardless of
    scheduling interactions or the triangle inequality.
    """
    n = inst.n
    d = inst.d
    others = [sorted(set(range(n)) - {i}) for i in range(n)]
    cover = []
    for i in range(n):
        opp = others[i]
        k = len(opp)
        table = [0] * (1 << k)
        for mask in range(1, 1 << k):
            lo = (mask & -mask).bit_length() - 1
            v = opp[lo]
            rest = mask & ~(1 << lo)
            best = 2 * d(i, v) + table[rest]
            sub = rest
            while sub:
                lo2 = (sub & -sub).bit_length() - 1
                w = opp[lo2]
                cand = d(i, v) + d(v, w) + d(w, i) + table[rest & ~(1 << lo2)]
                if cand < best:
                    best = cand
                sub &= sub - 1
            table[mask] = best
        cover.append(table)
    return others, cover


def brute_force_optimal(inst: Instance, lower_bound=None) -> tuple[Schedule, object]:
    """Exact optimum for n in {4, 6} by game-by-game backtracking.

    Days are filled one game at a time (lowest free team first, cheapest
    option first).  Branches are cut on no-repeat / bounded-by-2 prefixes,
    remaining-game counts, and partial cost plus the sum of per-team
    independent remaining-itinerary optima.  `lower_bound` (the instance's
    independent lower bound) allows an early exit when it is attained.
    """
    n = inst.n
    if n > BRUTE_FORCE_LIMIT:
        raise DomainError(f"brute force is guarded to n <= {BRUTE_FORCE_LIMIT}")
    days = 2 * n - 2
    d = inst.d
    others, cover = _trip_cover_tables(inst)
    bit = [{v: 1 << idx for idx, v in enumerate(others[i])} for i in range(n)]

    best_cost = None
    best_days = None

    venue = list(range(n))
    run = [(0, 0)] * n  # (+1 away / -1 home, consecutive count)
    last_opp = [-1] * n
    away_mask = [(1 << (n - 1)) - 1 for _ in range(n)]
    home_left = [n - 1] * n
    schedule_days: list[list[tuple[int, int]]] = [[] for _ in range(days)]

    def team_bound(i: int) -> int:
        mask = away_mask[i]
        v = venue[i]
        if v == i:
            return cover[i][mask]
        # Currently away at v: either head home now, or take one more stop
        # if the current trip has room.
        best = d(v, i) + cover[i][mask]
        if run[i][1] < 2:
            sub = mask
            while sub:
                lo = (sub & -sub).bit_length() - 1
                w = others[i][lo]
                if w != last_opp[i]:
                    cand = d(v, w) + d(w, i) + cover[i][mask & ~(1 << lo)]
                    if cand < best:
                        best = cand
                sub &= sub - 1
        return best

    bound_parts = [team_bound(i) for i in range(n)]

    def play(away: int, home: int):
        venue[away] = home
        venue[home] = home
        s_a, l_a = run[away]
        run[away] = (1, l_a + 1 if s_a == 1 else 1)
        s_h, l_h = run[home]
        run[home] = (-1, l_h + 1 if s_h == -1 else 1)
        last_opp[away] = home
        last_opp[home] = away
        away_mask[away] &= ~bit[away][home]
        home_left[home] -= 1
        bound_parts[away] = team_bound(away)
        bound_parts[home] = team_bound(home)

    def may_play(away: int, home: int) -> bool:
        if not away_mask[away] & bit[away][home]:
            return False
        if last_opp[away] == home:
            return False
        s_a, l_a = run[away]
        if s_a == 1 and l_a >= 2:
            return False
        s_h, l_h = run[home]
        if s_h == -1 and l_h >= 2:
            return False
        return True

    def counts_ok(days_left: int) -> bool:
        for i in range(n):
            if away_mask[i].bit_count() + home_left[i] > days_left:
                return False
        return True

    def search(day: int, free: list[int], cost: int):
        nonlocal best_cost, best_days
        if best_cost is not None and lower_bound is not None and best_cost <= lower_bound:
            return
        if best_cost is not None and cost + sum(bound_parts) >= best_cost:
            return
        if not free:
            nxt = day + 1
            if nxt == days:
                total = cost + sum(d(venue[i], i) for i in range(n) if venue[i] != i)
                if best_cost is None or total < best_cost:
                    best_cost = total
                    best_days = [list(g) for g in schedule_days]
                return
            if counts_ok(days - nxt):
                search(nxt, list(range(n)), cost)
            return

        t = free[0]
        options = []
        for u in free[1:]:
            if may_play(t, u):
                options.append((d(venue[t], u) + d(venue[u], u), t, u))
            if may_play(u, t):
                options.append((d(venue[u], t) + d(venue[t], t), u, t))
        options.sort(key=lambda o: o[0])

        for step, away, home in options:
            saved = (
                venue[away], run[away], last_opp[away], bound_parts[away],
                venue[home], run[home], last_opp[home], bound_parts[home],
            )
            play(away, home)
            schedule_days[day].append((away, home))
            rest = [x for x in free if x != away and x != home]
            search(day, rest, cost + step)
            schedule_days[day].pop()
            away_mask[away] |= bit[away][home]
            home_left[home] += 1
            (venue[away], run[away], last_opp[away], bound_parts[away],
             venue[home], run[home], last_opp[home], bound_parts[home]) = saved

    search(0, list(range(n)), 0)
    if best_days is None:
        raise AssertionError("no feasible schedule found")
    sched = games_to_schedule(n, best_days)
    return sched, best_cost
