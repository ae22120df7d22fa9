"""Instance model and plain-text (de)serialization of distance matrices.

An instance is a symmetric n x n matrix of non-negative distances between
team home venues, with a zero diagonal and an even number of teams.  The
text format is whitespace-separated numbers, either a leading team count
followed by the n*n entries row-major, or a bare k*k block.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError, ValidationError


@dataclass(frozen=True)
class Instance:
    """A TTP instance: team count, team names and the distance matrix."""

    n: int
    dist: np.ndarray
    names: tuple[str, ...] = field(default=())
    integral: bool = True

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(f"t{i + 1}" for i in range(self.n)))
        object.__setattr__(self, "dist", _frozen(self.dist))
        _validate(self.n, self.dist)

    def d(self, i: int, j: int):
        """Distance between the homes of teams i and j (0-based)."""
        return self.dist[i, j].item()


def _frozen(dist: np.ndarray) -> np.ndarray:
    a = np.array(dist, copy=True)
    a.setflags(write=False)
    return a


def _validate(n: int, dist: np.ndarray) -> None:
    if n < 4 or n % 2 != 0:
        raise ValidationError(f"team count must be even and >= 4, got {n}")
    if dist.shape != (n, n):
        raise ValidationError(f"distance matrix shape {dist.shape} does not match n={n}")
    if not np.all(np.isfinite(dist)):
        raise ValidationError("distance matrix contains non-finite entries")
    for i in range(n):
        if dist[i, i] != 0:
            raise ValidationError(f"diagonal entry ({i},{i}) is {dist[i, i]}, expected 0")
        for j in range(i + 1, n):
            if dist[i, j] < 0:
                raise ValidationError(f"negative distance at ({i},{j}): {dist[i, j]}")
            if dist[i, j] != dist[j, i]:
                raise ValidationError(
                    f"asymmetry at ({i},{j}): {dist[i, j]} != {dist[j, i]}"
                )


@dataclass(frozen=True)
class MetricReport:
    """Result of a triangle-inequality / symmetry scan (report only)."""

    symmetric: bool
    zero_diagonal: bool
    triangle_violations: int
    max_violation: float


def parse_instance(text: str, names: tuple[str, ...] = ()) -> Instance:
    """Parse a whitespace-separated distance matrix.

    Accepts either ``n`` followed by n*n entries, or exactly k*k entries for
    some integer k.  When the first token is an even integer and the rest is
    exactly first**2 entries, the leading-count form wins.
    """
    tokens = text.split()
    if not tokens:
        raise FormatError("empty input")
    values = []
    integral = True
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            try:
                values.append(float(tok))
                integral = False
            except ValueError:
                raise FormatError(f"non-numeric token {tok!r}") from None

    first = values[0]
    rest = len(values) - 1
    n = None
    if isinstance(first, int) and first > 0 and first % 2 == 0 and rest == first * first:
        n = first
        body = values[1:]
    else:
        k = round(len(values) ** 0.5)
        if k * k == len(values):
            n = k
            body = values
        else:
            raise FormatError(
                f"token count {len(values)} is neither 1+n^2 nor a perfect square"
            )

    dtype = np.int64 if integral else np.float64
    dist = np.array(body, dtype=dtype).reshape(n, n)
    return Instance(n=n, dist=dist, names=names, integral=integral)


def write_instance(inst: Instance) -> str:
    """Canonical text form: the team count, then one row per line."""
    lines = [str(inst.n)]
    for row in inst.dist:
        lines.append(" ".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    x = v.item()
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    return str(x)


def check_metric(inst: Instance) -> MetricReport:
    """Exhaustive O(n^3) scan for triangle violations; never raises."""
    d = inst.dist
    n = inst.n
    symmetric = bool(np.array_equal(d, d.T))
    zero_diagonal = bool(np.all(np.diag(d) == 0))
    violations = 0
    worst = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            # dist[i][j] <= dist[i][h] + dist[h][j] for every stopover h
            through = d[i, :] + d[:, j]
            excess = d[i, j] - through
            excess[i] = 0
            excess[j] = 0
            bad = excess > 0
            violations += int(np.count_nonzero(bad))
            if bad.any():
                worst = max(worst, excess[bad].max().item())
    return MetricReport(
        symmetric=symmetric,
        zero_diagonal=zero_diagonal,
        triangle_violations=violations,
        max_violation=worst,
    )
