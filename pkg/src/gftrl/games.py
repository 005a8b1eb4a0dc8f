"""Matrix games as payoff-gradient oracles.

A game is stored in poly-matrix form: a map from ordered player pairs
(i, j) to a matrix A_ij such that player i's payoff gradient is
u_i = sum_j A_ij x_j. Two-player games are the special case with the
pairs (0, 1) and (1, 0). The gradient of player i never depends on
x_i itself (multi-linear payoffs), which is what makes the pure-profile
enumeration below exact for the Lipschitz-style payoff range.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DimensionError, NoInteriorEquilibriumError

ZERO_SUM_TOL = 1e-12


@dataclass(frozen=True)
class GameSpec:
    """Immutable description of one poly-matrix game.

    matrices maps (i, j) with i != j to the gradient matrix A_ij of shape
    |A_i| x |A_j|. lipschitz is the payoff range max_i (max U_i - min U_i)
    over pure profiles. nash_reference, when present, is a per-player tuple
    of equilibrium strategies used by distance metrics.
    """

    name: str
    num_players: int
    action_counts: tuple[int, ...]
    matrices: dict[tuple[int, int], np.ndarray]
    lipschitz: float
    nash_reference: tuple[np.ndarray, ...] | None = field(default=None)

    def __post_init__(self):
        if self.num_players < 2:
            raise ConfigError("a game needs at least two players")
        if len(self.action_counts) != self.num_players:
            raise DimensionError("action_counts length != num_players")
        for (i, j), a in self.matrices.items():
            if i == j:
                raise ConfigError("self-pair (%d, %d) not allowed" % (i, j))
            want = (self.action_counts[i], self.action_counts[j])
            if a.shape != want:
                raise DimensionError(
                    "matrix (%d, %d) has shape %s, want %s" % (i, j, a.shape, want))
        if self.lipschitz < 0:
            raise ConfigError("lipschitz must be nonnegative")


def gradient(game: GameSpec, profile) -> list[np.ndarray]:
    """Payoff gradients u_i = sum_{j != i} A_ij x_j for every player."""
    xs = [np.asarray(x, dtype=float) for x in profile]
    if len(xs) != game.num_players:
        raise DimensionError("profile has %d players, game has %d"
                             % (len(xs), game.num_players))
    for i, x in enumerate(xs):
        if x.shape != (game.action_counts[i],):
            raise DimensionError("player %d strategy has shape %s, want (%d,)"
                                 % (i, x.shape, game.action_counts[i]))
    out = []
    for i in range(game.num_players):
        u = np.zeros(game.action_counts[i])
        for j in range(game.num_players):
            if i != j and (i, j) in game.matrices:
                u += game.matrices[(i, j)] @ xs[j]
        out.append(u)
    return out


def payoff_range(matrices, num_players, action_counts) -> float:
    """max_i (max U_i - min U_i) over pure strategy profiles.

    Payoffs are multi-linear, so both extremes are attained at vertices;
    enumeration is exact. Intended for the small built-in games.
    """
    best = 0.0
    for i in range(num_players):
        lo, hi = np.inf, -np.inf
        opponents = [j for j in range(num_players) if j != i]
        for mine in range(action_counts[i]):
            for pure in itertools.product(*(range(action_counts[j]) for j in opponents)):
                val = 0.0
                for j, aj in zip(opponents, pure):
                    if (i, j) in matrices:
                        val += matrices[(i, j)][mine, aj]
                lo, hi = min(lo, val), max(hi, val)
        best = max(best, hi - lo)
    return best


def bimatrix(name, a1, a2, nash_reference=None) -> GameSpec:
    """Two-player game from explicit gradient matrices u_1 = A1 x_2, u_2 = A2 x_1."""
    a1 = np.asarray(a1, dtype=float)
    a2 = np.asarray(a2, dtype=float)
    if a1.shape != a2.T.shape:
        raise DimensionError("A1 and A2^T must have matching shapes")
    mats = {(0, 1): a1, (1, 0): a2}
    counts = (a1.shape[0], a2.shape[0])
    lip = payoff_range(mats, 2, counts)
    nash = tuple(np.asarray(v, dtype=float) for v in nash_reference) \
        if nash_reference is not None else None
    return GameSpec(name=name, num_players=2, action_counts=counts,
                    matrices=mats, lipschitz=lip, nash_reference=nash)


MP_MATRIX = np.array([[1.0, -1.0], [-1.0, 1.0]])

RPS_MATRIX = np.array([
    [0.0, -1.0, 1.0],
    [1.0, 0.0, -2.0],
    [-1.0, 2.0, 0.0],
])

SATO_DIAG = np.diag([0.1, 0.2, 0.2])


def matching_pennies() -> GameSpec:
    """Two-action zero-sum game; uniform play is the unique equilibrium."""
    uniform = (np.full(2, 0.5), np.full(2, 0.5))
    return bimatrix("matching_pennies", MP_MATRIX, -MP_MATRIX.T, uniform)


def weighted_rps() -> GameSpec:
    """Rock-paper-scissors with asymmetric win weights; zero-sum."""
    star = nash_of_symmetric_zero_sum(RPS_MATRIX)
    return bimatrix("weighted_rps", RPS_MATRIX, -RPS_MATRIX.T, (star, star))


def sato_game() -> GameSpec:
    """Weighted RPS plus diagonal draw scores for player 1; not zero-sum."""
    return bimatrix("sato", RPS_MATRIX + SATO_DIAG, -RPS_MATRIX.T)


def is_polymatrix_zero_sum(game: GameSpec, tol: float = ZERO_SUM_TOL) -> bool:
    """True iff A_ji = -A_ij^T for every ordered pair, within tol."""
    for (i, j), a in game.matrices.items():
        b = game.matrices.get((j, i))
        if b is None or not np.allclose(b, -a.T, atol=tol, rtol=0.0):
            return False
    return True


def nash_of_symmetric_zero_sum(a, tol: float = 1e-10) -> np.ndarray:
    """Interior simplex point y with A y = 0, for antisymmetric A.

    Solves the stacked system [A; 1^T] y = [0; 1] by least squares and
    validates the residual and interiority.
    """
    a = np.asarray(a, dtype=float)
    d = a.shape[0]
    if a.shape != (d, d):
        raise DimensionError("matrix must be square")
    lhs = np.vstack([a, np.ones((1, d))])
    rhs = np.zeros(d + 1)
    rhs[-1] = 1.0
    y, *_ = np.linalg.lstsq(lhs, rhs, rcond=None)
    if np.max(np.abs(a @ y)) > tol or abs(y.sum() - 1.0) > tol:
        raise NoInteriorEquilibriumError("no simplex point solves A y = 0")
    if np.min(y) <= 0.0:
        raise NoInteriorEquilibriumError("equilibrium lies on the boundary")
    return y


def parse_matrix_block(text: str) -> np.ndarray:
    """Matrix from lines of whitespace-separated decimals."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([float(tok) for tok in line.split()])
    if not rows:
        raise ConfigError("empty matrix block")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ConfigError("ragged matrix block")
    return np.array(rows)


def load_custom_game(path: str) -> GameSpec:
    """Bimatrix game from a text file: A1 block, blank line, A2 block."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    blocks = [b for b in text.split("\n\n") if b.strip()]
    if len(blocks) != 2:
        raise ConfigError("expected two matrix blocks separated by a blank line")
    return bimatrix(path, parse_matrix_block(blocks[0]), parse_matrix_block(blocks[1]))


GAME_BUILDERS = {
    "matching_pennies": matching_pennies,
    "sato": sato_game,
    "weighted_rps": weighted_rps,
}


def game_by_name(name: str) -> GameSpec:
    """Built-in game by config name, or a custom game from a file path."""
    if name in GAME_BUILDERS:
        return GAME_BUILDERS[name]()
    try:
        return load_custom_game(name)
    except OSError:
        raise ConfigError("unknown game %r (choices: %s, or a readable file)"
                          % (name, ", ".join(sorted(GAME_BUILDERS))))
