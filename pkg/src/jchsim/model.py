"""Model parameters, single-excitation basis indexing and Hamiltonian assembly.

The single-excitation sector of an N-cavity array is spanned by the 2N states
{|photon at x>, |atom excited at x>}, x = 1..N.  Amplitude vectors are laid out
as the N photon amplitudes followed by the N atomic amplitudes.
"""

from dataclasses import dataclass

import numpy as np

PHOTON = "photon"
ATOM = "atom"


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of a uniform 1D coupled-cavity array.

    Energies are in units of the photon hopping J; times in 1/J.
    The cavity frequency defaults to 0, so the detuning is set by
    ``atom_freq`` alone.
    """

    n_cavities: int
    hopping: float = 1.0
    coupling: float = 0.0
    cavity_freq: float = 0.0
    atom_freq: float = 0.0

    def __post_init__(self):
        if int(self.n_cavities) != self.n_cavities or self.n_cavities < 2:
            raise ValueError(f"n_cavities must be an integer >= 2, got {self.n_cavities}")
        if not self.hopping > 0:
            raise ValueError(f"hopping must be > 0, got {self.hopping}")
        if self.coupling < 0:
            raise ValueError(f"coupling must be >= 0, got {self.coupling}")

    @property
    def dim(self) -> int:
        """Dimension of the single-excitation sector (2N)."""
        return 2 * self.n_cavities


def flat_index(kind: str, site: int, n_cavities: int) -> int:
    """Map (kind, 1-based site) to the flat index in [0, 2N)."""
    if not 1 <= site <= n_cavities:
        raise ValueError(f"site {site} out of range [1, {n_cavities}]")
    if kind == PHOTON:
        return site - 1
    if kind == ATOM:
        return n_cavities + site - 1
    raise ValueError(f"unknown basis kind {kind!r}")


def site_of(index: int, n_cavities: int) -> tuple[str, int]:
    """Inverse of :func:`flat_index`; returns (kind, 1-based site)."""
    if not 0 <= index < 2 * n_cavities:
        raise ValueError(f"index {index} out of range [0, {2 * n_cavities})")
    if index < n_cavities:
        return PHOTON, index + 1
    return ATOM, index - n_cavities + 1


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    """Assemble the 2N x 2N single-excitation Hamiltonian (real symmetric).

    Photon block: cavity frequency on the diagonal, -J on the first
    off-diagonals (open chain).  Atom block: atomic frequency times identity.
    Photon-atom blocks: the coupling g times identity.
    """
    n = params.n_cavities
    h = np.zeros((2 * n, 2 * n))
    ph = h[:n, :n]
    ph[np.arange(n), np.arange(n)] = params.cavity_freq
    ph[np.arange(n - 1), np.arange(1, n)] = -params.hopping
    ph[np.arange(1, n), np.arange(n - 1)] = -params.hopping
    h[n:, n:] = params.atom_freq * np.eye(n)
    h[:n, n:] = params.coupling * np.eye(n)
    h[n:, :n] = params.coupling * np.eye(n)
    return h


def initial_atomic_excitation(params: ModelParams, x0: int) -> np.ndarray:
    """State with the atom at site x0 excited, everything else in vacuum."""
    state = np.zeros(params.dim, dtype=complex)
    state[flat_index(ATOM, x0, params.n_cavities)] = 1.0
    return state


def norm(state: np.ndarray) -> float:
    """Euclidean norm of an amplitude vector."""
    return float(np.linalg.norm(state))
