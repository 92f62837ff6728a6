"""Self-contained eigenvalue machinery used by the verification oracles.

Two solvers live here so that the oracle paths do not share code with the
closed-form physics they are meant to check:

* a row-cyclic Jacobi eigensolver for real symmetric matrices, and
* eigenvalues of small complex matrices via the characteristic polynomial,
  companion-matrix reduction and a shifted QR iteration.
"""

import numpy as np


class ConvergenceError(RuntimeError):
    """Raised when an iterative eigensolver fails to converge."""


def jacobi_eigh(a: np.ndarray, tol: float = 1e-13, max_sweeps: int = 100):
    """Eigendecomposition of a real symmetric matrix by row-cyclic Jacobi.

    Sweeps annihilate off-diagonal entries in fixed row-cyclic order until the
    off-diagonal Frobenius norm drops below ``tol`` relative to the matrix
    norm.  Returns (eigenvalues ascending, eigenvectors as columns).

    Raises ConvergenceError after ``max_sweeps`` sweeps without convergence.
    """
    original = np.asarray(a, dtype=float)
    a = original.copy()
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(a, a.T, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    vecs = np.eye(n)
    scale = np.linalg.norm(a)
    if scale == 0.0 or n == 1:
        order = np.argsort(np.diag(a))
        return np.diag(a)[order], vecs[:, order]
    # rotations with |a_pq| below this cannot affect the converged result
    skip = 0.01 * tol * scale / n

    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            w = _rayleigh_refine(original, vecs)
            order = np.argsort(w, kind="stable")
            return w[order], vecs[:, order]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = vecs[:, p].copy()
                vq = vecs[:, q].copy()
                vecs[:, p] = c * vp - s * vq
                vecs[:, q] = s * vp + c * vq
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def _rayleigh_refine(a: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    """Rayleigh quotients of the Jacobi eigenvectors, accumulated in extended precision.

    The rotation cascade leaves the diagonal with an O(sqrt(rotations) * eps *
    ||A||) error, which propagation phases E*t amplify; recomputing against the
    untouched input matrix in long double removes the accumulation.
    """
    al = a.astype(np.longdouble)
    vl = vecs.astype(np.longdouble)
    w = np.einsum("ij,ij->j", vl, al @ vl) / np.einsum("ij,ij->j", vl, vl)
    return w.astype(float)


def evolution_phases(energies: np.ndarray, t: float) -> np.ndarray:
    """exp(-i E t) with the product E*t reduced mod 2pi in extended precision.

    For |E| t >> 1 the double rounding of the product alone costs
    eps * |E| t radians, which matters when two exact propagators are
    compared at tight tolerance.  ``t`` may be a scalar or an array; an array
    broadcasts to shape ``t.shape + energies.shape``.
    """
    angle = np.mod(
        np.multiply.outer(
            np.asarray(t, dtype=np.longdouble), np.asarray(energies, dtype=np.longdouble)
        ),
        _TWO_PI_LD,
    ).astype(float)
    return np.exp(-1j * angle)


# 2*pi to long-double precision; np.pi alone would leak eps(double) per wrap
_TWO_PI_LD = np.longdouble("6.28318530717958647692528676655900577")


def characteristic_polynomial(a: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial coefficients via Faddeev-LeVerrier.

    Returns ``c`` with ``det(lambda I - a) = lambda^n + c[0] lambda^(n-1)
    + ... + c[n-1]``.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    coeffs = np.zeros(n, dtype=complex)
    m = np.eye(n, dtype=complex)
    for i in range(1, n + 1):
        m = a @ m
        c = -np.trace(m) / i
        coeffs[i - 1] = c
        m = m + c * np.eye(n)
    return coeffs


def companion_matrix(coeffs: np.ndarray) -> np.ndarray:
    """Companion matrix of a monic polynomial given by its non-leading coefficients."""
    n = len(coeffs)
    c = np.zeros((n, n), dtype=complex)
    c[1:, :-1] = np.eye(n - 1)
    c[:, -1] = -np.asarray(coeffs, dtype=complex)[::-1]
    return c


def hessenberg_qr_eigvals(h: np.ndarray, tol: float = 1e-14, max_iter: int = 1000):
    """Eigenvalues of a complex upper-Hessenberg matrix by shifted QR with Givens rotations."""
    h = np.array(h, dtype=complex)
    n = h.shape[0]
    eigs = []
    iters = 0
    while n > 0:
        if n == 1:
            eigs.append(h[0, 0])
            break
        if abs(h[n - 1, n - 2]) <= tol * (abs(h[n - 2, n - 2]) + abs(h[n - 1, n - 1])):
            eigs.append(h[n - 1, n - 1])
            n -= 1
            h = h[:n, :n]
            continue
        if n == 2:
            eigs.extend(_eigvals_2x2(h))
            break
        if abs(h[n - 2, n - 3]) <= tol * (abs(h[n - 3, n - 3]) + abs(h[n - 2, n - 2])):
            eigs.extend(_eigvals_2x2(h[n - 2:, n - 2:]))
            n -= 2
            h = h[:n, :n]
            continue
        iters += 1
        if iters > max_iter:
            raise ConvergenceError("QR iteration did not converge")
        # single-shift QR step: H - mu I = QR, H <- RQ + mu I
        mu = _wilkinson_shift(h[n - 2:, n - 2:])
        d = np.arange(n)
        h[d, d] -= mu
        rotations = []
        for i in range(n - 1):
            c, s = _givens(h[i, i], h[i + 1, i])
            rotations.append((c, s))
            gi = np.array([[c, s], [-np.conj(s), c]])
            h[i:i + 2, i:] = gi @ h[i:i + 2, i:]
        for i, (c, s) in enumerate(rotations):
            gi_h = np.array([[c, -s], [np.conj(s), c]])
            h[:, i:i + 2] = h[:, i:i + 2] @ gi_h
        h[d, d] += mu
    return np.array(eigs[::-1], dtype=complex)


def _givens(f, g):
    """Complex Givens pair (c real, s) with [c s; -conj(s) c] @ [f; g] = [r; 0]."""
    if g == 0:
        return 1.0, 0.0 + 0j
    if f == 0:
        return 0.0, np.conj(g) / abs(g)
    r = np.hypot(abs(f), abs(g))
    return abs(f) / r, (f / abs(f)) * np.conj(g) / r


def _eigvals_2x2(m):
    tr = m[0, 0] + m[1, 1]
    disc = np.sqrt((m[0, 0] - m[1, 1]) ** 2 + 4.0 * m[0, 1] * m[1, 0] + 0j)
    return np.array([(tr + disc) / 2.0, (tr - disc) / 2.0])


def _wilkinson_shift(m):
    e = _eigvals_2x2(m)
    return e[0] if abs(e[0] - m[1, 1]) < abs(e[1] - m[1, 1]) else e[1]


def small_matrix_eigvals(a: np.ndarray, coeff_tol: float = 1e-13) -> np.ndarray:
    """Eigenvalues of a small complex matrix via companion-matrix reduction.

    The matrix is normalized, its characteristic polynomial taken, and the
    companion eigenproblem solved by shifted QR.  Coefficients below
    ``coeff_tol`` are rounded to exact zero first: a defective zero eigenvalue
    would otherwise smear into a root cluster of radius ~eps^(1/multiplicity).
    """
    a = np.asarray(a, dtype=complex)
    scale = np.abs(a).max()
    if scale == 0.0:
        return np.zeros(a.shape[0], dtype=complex)
    coeffs = characteristic_polynomial(a / scale)
    coeffs[np.abs(coeffs) < coeff_tol] = 0.0
    # exact zero roots deflate analytically
    zeros = 0
    while len(coeffs) > 0 and coeffs[-1] == 0.0:
        coeffs = coeffs[:-1]
        zeros += 1
    if len(coeffs) == 0:
        roots = np.array([], dtype=complex)
    elif len(coeffs) == 1:
        roots = np.array([-coeffs[0]])
    elif len(coeffs) == 2:
        roots = _eigvals_2x2(np.array([[-coeffs[0], -coeffs[1]], [1.0, 0.0]]))
    else:
        roots = hessenberg_qr_eigvals(companion_matrix(coeffs))
    return scale * np.concatenate([roots, np.zeros(zeros, dtype=complex)])
