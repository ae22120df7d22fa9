"""Schedule data model, feasibility validation and distance accounting.

A schedule is an n x (2n-2) table of signed opponents: entry +j in row i
means team i plays at the home of team j, entry -j means team i hosts
team j.  Opponent numbers in the table are 1-based; all function arguments
and itineraries use 0-based team indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FormatError
from .instance import Instance


@dataclass(frozen=True)
class Schedule:
    n: int
    table: np.ndarray  # shape (n, 2n-2), signed 1-based opponents

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        if t.shape != (self.n, 2 * self.n - 2):
            raise FormatError(f"table shape {t.shape} does not match n={self.n}")

    @property
    def days(self) -> int:
        return 2 * self.n - 2

    def opponent(self, team: int, day: int) -> int:
        """0-based opponent of `team` on `day`."""
        return abs(int(self.table[team, day])) - 1

    def is_away(self, team: int, day: int) -> bool:
        return int(self.table[team, day]) > 0


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[tuple[str, int, int], ...]  # (property, team, day), 0-based


@dataclass(frozen=True)
class DistanceReport:
    total: object
    per_team: tuple
    lb_gap_percent: float | None = None


def games_to_schedule(n: int, days: list[list[tuple[int, int]]]) -> Schedule:
    """Assemble a table from per-day lists of (visitor, host) 0-based games."""
    if len(days) != 2 * n - 2:
        raise FormatError(f"expected {2 * n - 2} days, got {len(days)}")
    table = np.zeros((n, 2 * n - 2), dtype=np.int64)
    for d, games in enumerate(days):
        seen = set()
        for away, home in games:
            if away == home:
                raise FormatError(f"self game on day {d}")
            if away in seen or home in seen:
                raise FormatError(f"team plays twice on day {d}")
            seen.update((away, home))
            table[away, d] = home + 1
            table[home, d] = -(away + 1)
        if len(seen) != n:
            raise FormatError(f"day {d} schedules {len(seen)} of {n} teams")
    return Schedule(n=n, table=table)


def validate_schedule(s: Schedule, k: int = 2) -> FeasibilityReport:
    """Check the feasibility properties; collect every violation.

    Direct-traveling is a convention of the distance model and is not a
    table property, so it is not checked here.
    """
    n = s.n
    t = s.table
    violations: list[tuple[str, int, int]] = []

    # Shape / mirror consistency ("fixed-game-time").
    for i in range(n):
        for d in range(s.days):
            e = int(t[i, d])
            if e == 0 or abs(e) > n or abs(e) == i + 1:
                violations.append(("fixed-game-time", i, d))
                continue
            j = abs(e) - 1
            mirror = int(t[j, d])
            if e > 0 and mirror != -(i + 1):
                violations.append(("fixed-game-time", i, d))
            if e < 0 and mirror != (i + 1):
                violations.append(("fixed-game-time", i, d))

    # Each ordered pair appears exactly once as an away game ("fixed-game-value").
    for i in range(n):
        row = t[i]
        for j in range(n):
            if j == i:
                continue
            aways = int(np.count_nonzero(row == j + 1))
            if aways != 1:
                violations.append(("fixed-game-value", i, j))

    # No two consecutive days against the same opponent ("no-repeat").
    for i in range(n):
        for d in range(s.days - 1):
            if abs(int(t[i, d])) == abs(int(t[i, d + 1])):
                violations.append(("no-repeat", i, d + 1))

    # At most k consecutive home or away games ("bounded-by-k").
    for i in range(n):
        run_sign = 0
        run_len = 0
        for d in range(s.days):
            sign = 1 if int(t[i, d]) > 0 else -1
            if sign == run_sign:
                run_len += 1
            else:
                run_sign = sign
                run_len = 1
            if run_len == k + 1:
                violations.append(("bounded-by-k", i, d))

    return FeasibilityReport(feasible=not violations, violations=tuple(violations))


def venue_sequence(s: Schedule, team: int) -> list[int]:
    """Home-start, per-day venue, home-end (venues as 0-based team indices)."""
    seq = [team]
    for d in range(s.days):
        seq.append(s.opponent(team, d) if s.is_away(team, d) else team)
    seq.append(team)
    return seq


def total_distance(s: Schedule, inst: Instance, lb=None) -> DistanceReport:
    """Sum of direct travels along every team's venue sequence."""
    per_team = []
    for i in range(s.n):
        seq = venue_sequence(s, i)
        dist = 0
        for a, b in zip(seq, seq[1:]):
            if a != b:
                dist += inst.d(a, b)
        per_team.append(dist)
    total = sum(per_team)
    gap = None
    if lb is not None and lb > 0:
        gap = 100.0 * (total - lb) / lb
    return DistanceReport(total=total, per_team=tuple(per_team), lb_gap_percent=gap)


def itinerary_of(s: Schedule, team: int) -> list[list[int]]:
    """Road trips of a team: maximal away blocks as visited-opponent lists."""
    trips: list[list[int]] = []
    current: list[int] = []
    for d in range(s.days):
        if s.is_away(team, d):
            current.append(s.opponent(team, d))
        elif current:
            trips.append(current)
            current = []
    if current:
        trips.append(current)
    return trips


def render_schedule(s: Schedule) -> str:
    """CSV with one row per team and cells +j / -j (1-based opponents)."""
    lines = []
    for i in range(s.n):
        cells = []
        for d in range(s.days):
            e = int(s.table[i, d])
            cells.append(f"+{e}" if e > 0 else str(e))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def parse_schedule_csv(text: str) -> Schedule:
    rows = [line for line in text.splitlines() if line.strip()]
    if not rows:
        raise FormatError("empty schedule CSV")
    table = []
    for line in rows:
        try:
            table.append([int(cell) for cell in line.split(",")])
        except ValueError as exc:
            raise FormatError(f"bad cell in line {line!r}") from exc
    n = len(table)
    if any(len(r) != 2 * n - 2 for r in table):
        raise FormatError("rows do not all have 2n-2 entries")
    return Schedule(n=n, table=np.array(table, dtype=np.int64))
