"""Pure-numpy kernels. Every function here has a numba twin in ``_numba``."""

import numpy as np

TWO_PI = 2.0 * np.pi


def eta_logsum(x, y, nterms):
    """sum_{n=1}^{nterms} Log(1 - e(n z)) for z = x + iy, principal branch."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    q = np.exp(-TWO_PI * y) * np.exp(1j * TWO_PI * x)
    w = q
    re = np.zeros(x.shape)
    im = np.zeros(x.shape)
    for _ in range(nterms):
        re += 0.5 * np.log1p(w.real**2 + w.imag**2 - 2.0 * w.real)
        im += np.arctan2(-w.imag, 1.0 - w.real)
        w = w * q
    return re + 1j * im


def grad_series(x, y, shifted, nterms):
    """Series parts of (X_j, Y_j).

    ``shifted=False`` gives the f_1 sums (wave number 2*pi*n, coefficient
    8*pi*n); ``shifted=True`` the f_0 sums (pi*n, 4*pi*n, argument x+1).
    The constant 1/y - pi/c is added by the caller.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    k = np.pi if shifted else TWO_PI
    X = np.zeros(x.shape)
    Y = np.zeros(x.shape)
    with np.errstate(over="ignore"):
        for n in range(1, nterms + 1):
            kn = k * n
            half = 0.5 * kn * x
            if shifted and n % 2 == 1:
                s, c = -np.sin(kn * x), -np.cos(kn * x)
                s2 = np.cos(half) ** 2
            else:
                s, c = np.sin(kn * x), np.cos(kn * x)
                s2 = np.sin(half) ** 2
            denom = 4.0 * (np.sinh(0.5 * kn * y) ** 2 + s2)
            coef = 4.0 * kn
            X += coef * s / denom
            Y += coef * (c - np.exp(-kn * y)) / denom
    return X, Y


def green_logsum(s, t, tau_re, tau_im, nterms):
    """sum_n log|1 - e(n tau + u)| + log|1 - e(n tau - u)| for u = s + it.

    Assumes |e(n tau +- u)| is well below 1, which holds after the caller
    folds u into the central cell of a reduced basis.
    """
    s = np.asarray(s, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    q = np.exp(-TWO_PI * tau_im) * np.exp(1j * TWO_PI * tau_re)
    eu = np.exp(-TWO_PI * t) * np.exp(1j * TWO_PI * s)
    wp = q * eu
    wm = q / eu
    out = np.zeros(s.shape)
    for _ in range(nterms):
        out += np.log1p(wp.real**2 + wp.imag**2 - 2.0 * wp.real)
        out += np.log1p(wm.real**2 + wm.imag**2 - 2.0 * wm.real)
        wp = wp * q
        wm = wm * q
    return 0.5 * out
