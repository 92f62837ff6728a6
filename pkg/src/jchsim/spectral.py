"""Free-field normal modes of the open chain and the dressed (polariton) spectrum.

For a uniform open chain the photon normal modes are standing waves
v_{k,x} = sqrt(2/(N+1)) sin(kx) with k = pi*m/(N+1), m = 1..N, at frequencies
omega_k = omega_c - 2J cos(k).  Each mode hybridizes with its atomic
counterpart through a 2x2 block, giving two dressed branches per mode.
"""

from dataclasses import dataclass, replace

import numpy as np

from .model import ModelParams


@dataclass(frozen=True)
class ModeTable:
    """Normal modes plus (optionally) their dressed-state quantities.

    ``vectors[m-1, x-1]`` holds v_{k,x}.  The dressed fields are ``None``
    until filled by :func:`dressed_spectrum`.
    """

    params: ModelParams
    momenta: np.ndarray
    frequencies: np.ndarray
    vectors: np.ndarray
    detunings: np.ndarray | None = None
    rabi: np.ndarray | None = None
    a_plus: np.ndarray | None = None
    a_minus: np.ndarray | None = None
    b_plus: np.ndarray | None = None
    b_minus: np.ndarray | None = None
    eps_plus: np.ndarray | None = None
    eps_minus: np.ndarray | None = None

    @property
    def is_dressed(self) -> bool:
        return self.detunings is not None


def free_field_modes(params: ModelParams) -> ModeTable:
    """Closed-form normal modes of the open uniform chain (modes only)."""
    n = params.n_cavities
    m = np.arange(1, n + 1)
    k = np.pi * m / (n + 1)
    x = np.arange(1, n + 1)
    vectors = np.sqrt(2.0 / (n + 1)) * np.sin(np.outer(k, x))
    frequencies = params.cavity_freq - 2.0 * params.hopping * np.cos(k)
    return ModeTable(params=params, momenta=k, frequencies=frequencies, vectors=vectors)


def dressed_spectrum(params: ModelParams, modes: ModeTable) -> ModeTable:
    """Fill the per-mode dressed quantities (detuning, Rabi, amplitudes, energies)."""
    g = params.coupling
    delta = params.atom_freq - modes.frequencies
    rabi = np.hypot(delta, 2.0 * g)
    mean = 0.5 * (params.atom_freq + modes.frequencies)
    eps_plus = mean + 0.5 * rabi
    eps_minus = mean - 0.5 * rabi

    def branch(sign):
        num = delta + sign * rabi
        r = np.hypot(num, 2.0 * g)
        a = np.empty_like(r)
        b = np.empty_like(r)
        ok = r > 0
        a[ok] = 2.0 * g / r[ok]
        b[ok] = num[ok] / r[ok]
        # r == 0 only at g == 0; the branch is then a bare mode.  At exact
        # degeneracy (delta == 0 too) put '+' on the photon and '-' on the
        # atom so the pair stays orthogonal.
        bare_atom = (~ok) & (delta == 0) & (sign < 0)
        a[~ok] = 1.0
        b[~ok] = 0.0
        a[bare_atom] = 0.0
        b[bare_atom] = 1.0
        return a, b

    a_plus, b_plus = branch(+1.0)
    a_minus, b_minus = branch(-1.0)
    return replace(
        modes,
        detunings=delta,
        rabi=rabi,
        a_plus=a_plus,
        a_minus=a_minus,
        b_plus=b_plus,
        b_minus=b_minus,
        eps_plus=eps_plus,
        eps_minus=eps_minus,
    )


def mode_table(params: ModelParams) -> ModeTable:
    """Convenience: free-field modes with dressed quantities filled in."""
    return dressed_spectrum(params, free_field_modes(params))


def eigenstate_vector(modes: ModeTable, m: int, branch: str) -> np.ndarray:
    """Full 2N eigenvector of mode m (1-based) on branch '+' or '-'."""
    if not modes.is_dressed:
        raise ValueError("mode table has no dressed quantities; call dressed_spectrum first")
    if branch == "+":
        a, b = modes.a_plus[m - 1], modes.b_plus[m - 1]
    elif branch == "-":
        a, b = modes.a_minus[m - 1], modes.b_minus[m - 1]
    else:
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    v = modes.vectors[m - 1]
    return np.concatenate([a * v, b * v]).astype(complex)
