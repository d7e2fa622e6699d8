"""numba-compiled kernels; same signatures and results as ``_numpy``."""

import cmath
import math

import numba
import numpy as np

TWO_PI = 2.0 * math.pi


@numba.njit(cache=True)
def _eta_logsum(x, y, nterms):
    out = np.zeros(x.shape[0], dtype=np.complex128)
    for i in range(x.shape[0]):
        q = math.exp(-TWO_PI * y[i]) * cmath.exp(1j * TWO_PI * x[i])
        w = q
        re = 0.0
        im = 0.0
        for n in range(nterms):
            # Log(1 - w): log1p keeps the real part accurate for tiny |w|
            re += 0.5 * math.log1p(w.real * w.real + w.imag * w.imag - 2.0 * w.real)
            im += math.atan2(-w.imag, 1.0 - w.real)
            w *= q
        out[i] = complex(re, im)
    return out


@numba.njit(cache=True)
def _grad_series(x, y, shifted, nterms):
    k = math.pi if shifted else TWO_PI
    X = np.zeros(x.shape[0])
    Y = np.zeros(x.shape[0])
    for i in range(x.shape[0]):
        xs = x[i]
        ys = y[i]
        ax = 0.0
        ay = 0.0
        for n in range(1, nterms + 1):
            kn = k * n
            half = 0.5 * kn * xs
            if shifted and n % 2 == 1:
                s = -math.sin(kn * xs)
                c = -math.cos(kn * xs)
                s2 = math.cos(half) ** 2
            else:
                s = math.sin(kn * xs)
                c = math.cos(kn * xs)
                s2 = math.sin(half) ** 2
            a = 0.5 * kn * ys
            if a > 350.0:
                break
            denom = 4.0 * (math.sinh(a) ** 2 + s2)
            coef = 4.0 * kn
            ax += coef * s / denom
            ay += coef * (c - math.exp(-kn * ys)) / denom
        X[i] = ax
        Y[i] = ay
    return X, Y


@numba.njit(cache=True)
def _green_logsum(s, t, tau_re, tau_im, nterms):
    out = np.zeros(s.shape[0])
    q = math.exp(-TWO_PI * tau_im) * cmath.exp(1j * TWO_PI * tau_re)
    for i in range(s.shape[0]):
        eu = math.exp(-TWO_PI * t[i]) * cmath.exp(1j * TWO_PI * s[i])
        wp = q * eu
        wm = q / eu
        acc = 0.0
        for n in range(nterms):
            # log|1 - w| = log1p(|w|^2 - 2 Re w) / 2, fine for |w| well below 1
            acc += math.log1p(wp.real * wp.real + wp.imag * wp.imag - 2.0 * wp.real)
            acc += math.log1p(wm.real * wm.real + wm.imag * wm.imag - 2.0 * wm.real)
            wp *= q
            wm *= q
        out[i] = 0.5 * acc
    return out


def _flat(a):
    a = np.asarray(a, dtype=np.float64)
    return a.shape, np.ascontiguousarray(a.ravel())


def eta_logsum(x, y, nterms):
    shape, xf = _flat(x)
    _, yf = _flat(np.broadcast_to(y, shape))
    return _eta_logsum(xf, yf, int(nterms)).reshape(shape)


def grad_series(x, y, shifted, nterms):
    shape, xf = _flat(x)
    _, yf = _flat(np.broadcast_to(y, shape))
    X, Y = _grad_series(xf, yf, bool(shifted), int(nterms))
    return X.reshape(shape), Y.reshape(shape)


def green_logsum(s, t, tau_re, tau_im, nterms):
    shape, sf = _flat(s)
    _, tf = _flat(np.broadcast_to(t, shape))
    return _green_logsum(sf, tf, float(tau_re), float(tau_im), int(nterms)).reshape(shape)
