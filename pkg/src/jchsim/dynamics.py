"""Time evolution in the single-excitation sector.

Four propagators are provided:

* AnalyticPropagator -- exact, via the 2x2 dressed blocks of the normal-mode
  decomposition; valid in every coupling regime.
* DenseOraclePropagator -- exact, via a full Jacobi eigendecomposition of the
  Hamiltonian matrix; shares no formulas with the analytic path and accepts
  arbitrary symmetric photon-hopping matrices.
* WeakCouplingPropagator -- resonant-mode approximation (one mode dressed,
  the rest frozen); meaningful when g is small against all other detunings.
* StrongCouplingPropagator -- decoupled polariton chains; meaningful when g
  dominates the free-field bandwidth and the atomic frequency.

All propagators are immutable after construction and expose
``evolve(state, t)``; the exact ones are unitary to machine precision.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import evolution_phases, jacobi_eigh
from .model import ModelParams
from .spectral import ModeTable, mode_table


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid, in units of 1/J."""

    t_start: float
    t_end: float
    n_samples: int

    def __post_init__(self):
        if self.t_start < 0 or self.t_end < self.t_start:
            raise ValueError("need t_end >= t_start >= 0")
        if self.n_samples < 2:
            raise ValueError("need at least 2 samples")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_samples)


def _split(state, n):
    state = np.asarray(state, dtype=complex)
    if state.shape != (2 * n,):
        raise ValueError(f"expected a length-{2 * n} amplitude vector")
    return state[:n], state[n:]


class AnalyticPropagator:
    """Exact evolution through the per-mode 2x2 dressed blocks."""

    method = "analytic"

    def __init__(self, params: ModelParams, modes: ModeTable | None = None):
        self.params = params
        self.modes = modes if modes is not None and modes.is_dressed else mode_table(params)

    def evolve(self, state: np.ndarray, t: float) -> np.ndarray:
        return self.evolve_batch(state, np.array([t]))[0]

    def evolve_batch(self, state: np.ndarray, times: np.ndarray) -> np.ndarray:
        """States at several absolute times, shape (len(times), 2N)."""
        m = self.modes
        cf, ca = _split(state, self.params.n_cavities)
        a = m.vectors @ cf
        b = m.vectors @ ca
        # dressed coordinates per mode, evolved by their eigenphases
        p_plus = (m.a_plus * a + m.b_plus * b) * evolution_phases(m.eps_plus, times)
        p_minus = (m.a_minus * a + m.b_minus * b) * evolution_phases(m.eps_minus, times)
        a_t = m.a_plus * p_plus + m.a_minus * p_minus
        b_t = m.b_plus * p_plus + m.b_minus * p_minus
        return np.concatenate([a_t @ m.vectors, b_t @ m.vectors], axis=1)


class DenseOraclePropagator:
    """Exact evolution via a full Jacobi eigendecomposition of H."""

    method = "dense"

    def __init__(self, hamiltonian: np.ndarray):
        self.eigenvalues, self.eigenvectors = jacobi_eigh(hamiltonian)

    def evolve(self, state: np.ndarray, t: float) -> np.ndarray:
        u = self.eigenvectors
        coeffs = u.T @ np.asarray(state, dtype=complex)
        return u @ (evolution_phases(self.eigenvalues, t) * coeffs)


class WeakCouplingPropagator:
    """Effective evolution with a single dressed mode, all others frozen.

    ``validity`` is g over the smallest off-resonant detuning; the
    approximation is good when it is small.  The caller picks the resonant
    mode; nothing is refused when the metric is large.
    """

    method = "weak"

    def __init__(self, params: ModelParams, resonant_mode: int, modes: ModeTable | None = None):
        n = params.n_cavities
        if not 1 <= resonant_mode <= n:
            raise ValueError(f"resonant mode {resonant_mode} out of range [1, {n}]")
        self.params = params
        self.modes = modes if modes is not None and modes.is_dressed else mode_table(params)
        self.resonant_mode = resonant_mode
        others = np.abs(np.delete(self.modes.detunings, resonant_mode - 1))
        self.validity = float(params.coupling / others.min()) if others.min() > 0 else np.inf

    def evolve(self, state: np.ndarray, t: float) -> np.ndarray:
        m = self.modes
        params = self.params
        kr = self.resonant_mode - 1
        cf, ca = _split(state, params.n_cavities)
        a = m.vectors @ cf
        b = m.vectors @ ca
        # off-resonant modes keep their bare phases
        a_t = a * np.exp(-1j * m.frequencies * t)
        b_t = b * np.exp(-1j * params.atom_freq * t)
        # the resonant block rotates at the atomic frequency and Rabi-flops
        g = params.coupling
        phase = np.exp(-1j * params.atom_freq * t)
        a_t[kr] = phase * (np.cos(g * t) * a[kr] - 1j * np.sin(g * t) * b[kr])
        b_t[kr] = phase * (np.cos(g * t) * b[kr] - 1j * np.sin(g * t) * a[kr])
        return np.concatenate([m.vectors.T @ a_t, m.vectors.T @ b_t])


class StrongCouplingPropagator:
    """Effective evolution with the two polariton chains decoupled.

    ``validity`` is (bandwidth + atomic frequency) relative to g; small means
    the dropped inter-branch terms rotate fast and the approximation is good.
    """

    method = "strong"

    def __init__(self, params: ModelParams, modes: ModeTable | None = None):
        self.params = params
        self.modes = modes if modes is not None and modes.is_dressed else mode_table(params)
        g = params.coupling
        self.validity = (
            float(2.0 * (2.0 * params.hopping + abs(params.atom_freq)) / g) if g > 0 else np.inf
        )

    def evolve(self, state: np.ndarray, t: float) -> np.ndarray:
        m = self.modes
        g = self.params.coupling
        cf, ca = _split(state, self.params.n_cavities)
        # polariton branches, each a chain with hopping J/2 (mode energy w_k/2)
        p_plus = m.vectors @ ((cf + ca) / np.sqrt(2.0))
        p_minus = m.vectors @ ((cf - ca) / np.sqrt(2.0))
        p_plus = p_plus * np.exp(-1j * (g + m.frequencies / 2.0) * t)
        p_minus = p_minus * np.exp(-1j * (-g + m.frequencies / 2.0) * t)
        up = m.vectors.T @ p_plus
        um = m.vectors.T @ p_minus
        return np.concatenate([(up + um) / np.sqrt(2.0), (up - um) / np.sqrt(2.0)])


def weak_coupling_amplitudes(x0, t, modes, resonant_mode):
    """Atomic amplitudes of the resonant-mode approximation for |e_x0>.

    c_{a,x}(t) = e^{-i w_a t} [sum_{k != k'} v_{k,x} v_{k,x0}
                               + cos(gt) v_{k',x} v_{k',x0}].
    """
    params = modes.params
    v = modes.vectors
    kr = resonant_mode - 1
    vx0 = v[:, x0 - 1]
    weights = vx0.copy()
    weights[kr] *= np.cos(params.coupling * t)
    return np.exp(-1j * params.atom_freq * t) * (v.T @ weights).astype(complex)


def strong_coupling_amplitudes(x0, t, modes):
    """Atomic amplitudes of the decoupled-polariton approximation for |e_x0>.

    c_{a,x}(t) = cos(gt) sum_k e^{-i w_k t / 2} v_{k,x} v_{k,x0}.
    """
    params = modes.params
    v = modes.vectors
    vx0 = v[:, x0 - 1]
    return np.cos(params.coupling * t) * (v.T @ (np.exp(-1j * modes.frequencies * t / 2.0) * vx0))


def build_polariton_hamiltonian(params: ModelParams, drop_cross_terms: bool) -> np.ndarray:
    """Hamiltonian in the local polariton basis {|+_x>, |-_x>}.

    |+-_x> = (|photon_x> +- |atom_x>)/sqrt(2).  Each branch carries an on-site
    energy (w_c + w_a)/2 +- g and hopping -J/2.  The inter-branch pieces (the
    -J/2 cross hoppings plus an on-site (w_c - w_a)/2 term when the atoms are
    detuned) make the change of basis exact; ``drop_cross_terms`` removes them,
    leaving two decoupled chains.
    """
    n = params.n_cavities
    mean = 0.5 * (params.cavity_freq + params.atom_freq)
    half_j = 0.5 * params.hopping
    chain = np.zeros((n, n))
    chain[np.arange(n - 1), np.arange(1, n)] = -half_j
    chain[np.arange(1, n), np.arange(n - 1)] = -half_j
    h = np.zeros((2 * n, 2 * n))
    h[:n, :n] = chain + (mean + params.coupling) * np.eye(n)
    h[n:, n:] = chain + (mean - params.coupling) * np.eye(n)
    if not drop_cross_terms:
        cross = chain + 0.5 * (params.cavity_freq - params.atom_freq) * np.eye(n)
        h[:n, n:] = cross
        h[n:, :n] = cross
    return h


def make_propagator(method: str, params: ModelParams, modes: ModeTable | None = None,
                    resonant_mode: int | None = None):
    """Propagator factory keyed by method name."""
    if method == "analytic":
        return AnalyticPropagator(params, modes)
    if method == "dense":
        from .model import build_hamiltonian

        return DenseOraclePropagator(build_hamiltonian(params))
    if method == "weak":
        if resonant_mode is None:
            resonant_mode = (params.n_cavities + 1) // 2
        return WeakCouplingPropagator(params, resonant_mode, modes)
    if method == "strong":
        return StrongCouplingPropagator(params, modes)
    raise ValueError(f"unknown propagation method {method!r}")


def evolve_series(state0: np.ndarray, grid: TimeGrid, prop) -> np.ndarray:
    """States at every grid point, shape (n_samples, 2N).

    Each sample is propagated independently from the t = 0 state; there is no
    accumulation across samples, so results do not depend on grid resolution.
    """
    times = grid.times
    if hasattr(prop, "evolve_batch"):
        return prop.evolve_batch(state0, times)
    return np.array([prop.evolve(state0, t) for t in times])
