import numpy as np
import pytest

from ttp2.errors import DomainError
from ttp2.matching import min_weight_perfect_matching
from ttp2.odd import build_odd_template, extra_cost_breakdown
from ttp2.oracle import random_metric_instance, tight_instance
from ttp2.ordering import bind_template, random_ordering
from ttp2.schedule import total_distance, validate_schedule


def test_feasibility_sweep_both_mod8_variants():
    for n in range(10, 42, 4):  # alternates n = 2 and n = 6 (mod 8)
        rep = validate_schedule(build_odd_template(n), k=2)
        assert rep.feasible, (n, rep.violations[:4])


def test_tight_extra_cost_is_5n_minus_20():
    for n in range(10, 42, 4):
        ti = tight_instance(n)
        total = total_distance(build_odd_template(n), ti).total
        assert total == n * (n - 2) + 5 * n - 20


def test_r_team_rhythms():
    for n in (10, 14, 18):
        s = build_odd_template(n)
        m = n // 2
        r1, r2 = 2 * m - 2, 2 * m - 1
        for q in range(m - 2):
            p1 = "".join("A" if s.is_away(r1, 4 * q + d) else "H" for d in range(4))
            p2 = "".join("A" if s.is_away(r2, 4 * q + d) else "H" for d in range(4))
            assert p1 == "AHHA" and p2 == "HAAH", (n, q, p1, p2)


def test_final_block_pairs_partners_twice():
    for n in (10, 14):
        s = build_odd_template(n)
        for t in range(n):
            partner = t + 1 if t % 2 == 0 else t - 1
            opps = [s.opponent(t, d) for d in range(2 * n - 8, 2 * n - 2)]
            assert opps.count(partner) == 2
            signs = [s.is_away(t, d) for d in range(2 * n - 8, 2 * n - 2)]
            games = [(o, a) for o, a in zip(opps, signs) if o == partner]
            assert {a for _, a in games} == {True, False}  # one home, one away


def test_no_triple_runs_across_final_junction():
    # Joint check over the penultimate slot and the final six days.
    for n in (10, 14, 18):
        s = build_odd_template(n)
        start = max(0, 2 * n - 14)
        for t in range(n):
            signs = "".join(
                "A" if s.is_away(t, d) else "H" for d in range(start, 2 * n - 2)
            )
            assert "AAA" not in signs and "HHH" not in signs, (n, t, signs)


def test_delta_breakdown_tight_profile():
    for n in (10, 14, 18, 26):
        m = n // 2
        ti = tight_instance(n)
        matching = min_weight_perfect_matching(ti)
        s = build_odd_template(n)
        deltas = extra_cost_breakdown(s, ti, matching)
        assert sum(deltas) == 5 * n - 20
        assert deltas[0] == 7
        assert all(deltas[i - 1] == 0 for i in range(2, m - 2, 2))
        assert all(deltas[i - 1] == 8 for i in range(3, m - 1, 2))
        assert deltas[m - 2] == 4 * m - 14  # all left-super-game cost lands here
        assert deltas[m - 1] == 2 * m - 1


def test_delta_breakdown_zero_matrix():
    from ttp2.instance import Instance

    n = 10
    z = Instance(n=n, dist=np.zeros((n, n), dtype=np.int64))
    matching = min_weight_perfect_matching(z)
    deltas = extra_cost_breakdown(build_odd_template(n), z, matching)
    assert all(d == 0 for d in deltas)


def test_delta_breakdown_survives_binding():
    n = 10
    inst = random_metric_instance(n, 4)
    matching = min_weight_perfect_matching(inst)
    template = build_odd_template(n)
    bound = bind_template(template, matching, random_ordering(n // 2, 7))
    deltas = extra_cost_breakdown(bound, inst, matching)
    lb = sum(sum(inst.d(t, j) for j in range(n)) for t in range(n)) + n * matching.weight
    assert sum(deltas) == total_distance(bound, inst).total - lb


def test_breakdown_rejects_foreign_schedules(golden_n8):
    ti = tight_instance(8)
    matching = min_weight_perfect_matching(ti)
    with pytest.raises(DomainError):
        extra_cost_breakdown(golden_n8, ti, matching)


def test_whites_trips_stay_inside_normal_and_left_slots():
    # Teams outside the R super-team return home between four-day blocks
    # except in right super-games (where the final block absorbs leftovers).
    for n in (10, 14):
        s = build_odd_template(n)
        m = n // 2
        for team in range(2 * m - 2):  # whites and both L teams
            for q in range(1, m - 2):
                d = 4 * q
                if s.is_away(team, d - 1) and s.is_away(team, d):
                    pytest.fail(f"n={n}: team {team} trip straddles slot boundary {q}")


def test_domain_errors():
    for n in (8, 12, 6):
        with pytest.raises(DomainError):
            build_odd_template(n)
