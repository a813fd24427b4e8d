"""Pure-Python numeric kernels.

Complex matrices travel as array('d') buffers, row-major with interleaved
(re, im) pairs, so the compiled backend in _core.pyx can share the exact
calling convention. Entry (i, j) of an n x m matrix lives at offset
2*(i*m + j).
"""

from array import array
from cmath import exp, pi
from math import atan2, cos, hypot, sin, sqrt


def zeros(n: int) -> array:
    return array("d", bytes(16 * n))


def matmul(a, b, n: int, k: int, m: int) -> array:
    """(n x k) @ (k x m)."""
    out = zeros(n * m)
    for i in range(n):
        ar_ = 2 * i * k
        or_ = 2 * i * m
        for t in range(k):
            xr = a[ar_ + 2 * t]
            xi = a[ar_ + 2 * t + 1]
            if xr == 0.0 and xi == 0.0:
                continue
            br_ = 2 * t * m
            for j in range(m):
                yr = b[br_ + 2 * j]
                yi = b[br_ + 2 * j + 1]
                out[or_ + 2 * j] += xr * yr - xi * yi
                out[or_ + 2 * j + 1] += xr * yi + xi * yr
    return out


def cap_apply(src, cols: int, nn: int, left: int, right: int, e) -> array:
    """Contract two adjacent tensor legs with the form e (nn x nn).

    src has left*nn*nn*right rows; row ((l*nn + a)*nn + b)*right + r feeds
    output row l*right + r with weight e[a, b].
    """
    out = zeros(left * right * cols)
    w = 2 * cols
    for aa in range(nn):
        for bb in range(nn):
            er = e[2 * (aa * nn + bb)]
            ei = e[2 * (aa * nn + bb) + 1]
            if er == 0.0 and ei == 0.0:
                continue
            for l in range(left):
                sbase = ((l * nn + aa) * nn + bb) * right
                obase = l * right
                for r in range(right):
                    s = (sbase + r) * w
                    o = (obase + r) * w
                    for c in range(0, w, 2):
                        xr = src[s + c]
                        xi = src[s + c + 1]
                        out[o + c] += er * xr - ei * xi
                        out[o + c + 1] += er * xi + ei * xr
    return out


def cup_apply(src, cols: int, nn: int, left: int, right: int, d) -> array:
    """Insert two adjacent tensor legs weighted by the copairing d (nn x nn).

    src has left*right rows; output row ((l*nn + a)*nn + b)*right + r is
    d[a, b] times input row l*right + r.
    """
    out = zeros(left * nn * nn * right * cols)
    w = 2 * cols
    for aa in range(nn):
        for bb in range(nn):
            dr = d[2 * (aa * nn + bb)]
            di = d[2 * (aa * nn + bb) + 1]
            if dr == 0.0 and di == 0.0:
                continue
            for l in range(left):
                obase = ((l * nn + aa) * nn + bb) * right
                sbase = l * right
                for r in range(right):
                    o = (obase + r) * w
                    s = (sbase + r) * w
                    for c in range(0, w, 2):
                        xr = src[s + c]
                        xi = src[s + c + 1]
                        out[o + c] = dr * xr - di * xi
                        out[o + c + 1] = dr * xi + di * xr
    return out


def _offdiag(a, n: int) -> float:
    s = 0.0
    for p in range(n):
        for q in range(n):
            if p != q:
                s += a[2 * (p * n + q)] ** 2 + a[2 * (p * n + q) + 1] ** 2
    return sqrt(s)


def jacobi_eigh(h, n: int, rel_tol: float, max_sweeps: int):
    """Cyclic Jacobi for Hermitian h; returns (evals, vectors, converged).

    Two-sided unitary plane rotations; stops when the off-diagonal Frobenius
    mass drops below rel_tol times the Frobenius norm of h. Eigenvectors sit
    in the columns of the second return, unsorted.
    """
    a = array("d", h)
    v = zeros(n * n)
    for i in range(n):
        v[2 * (i * n + i)] = 1.0
    frob = sqrt(sum(x * x for x in h))
    thresh = rel_tol * frob
    converged = frob == 0.0 or n < 2
    for _ in range(max_sweeps):
        if _offdiag(a, n) <= thresh:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                bre = a[2 * (p * n + q)]
                bim = a[2 * (p * n + q) + 1]
                mag = hypot(bre, bim)
                if mag == 0.0:
                    continue
                app = a[2 * (p * n + p)]
                aqq = a[2 * (q * n + q)]
                theta = 0.5 * atan2(2.0 * mag, aqq - app)
                c = cos(theta)
                ur = bre / mag
                ui = bim / mag
                sr = sin(theta) * ur
                si = sin(theta) * ui
                # columns: A <- A G with G[p,p]=c, G[p,q]=s, G[q,p]=-conj(s), G[q,q]=c
                for k in range(n):
                    kp = 2 * (k * n + p)
                    kq = 2 * (k * n + q)
                    pr, pi_, qr, qi = a[kp], a[kp + 1], a[kq], a[kq + 1]
                    a[kp] = c * pr - (sr * qr + si * qi)
                    a[kp + 1] = c * pi_ - (sr * qi - si * qr)
                    a[kq] = c * qr + (sr * pr - si * pi_)
                    a[kq + 1] = c * qi + (sr * pi_ + si * pr)
                # rows: A <- G^H A
                for k in range(n):
                    pk = 2 * (p * n + k)
                    qk = 2 * (q * n + k)
                    pr, pi_, qr, qi = a[pk], a[pk + 1], a[qk], a[qk + 1]
                    a[pk] = c * pr - (sr * qr - si * qi)
                    a[pk + 1] = c * pi_ - (sr * qi + si * qr)
                    a[qk] = c * qr + (sr * pr + si * pi_)
                    a[qk + 1] = c * qi + (sr * pi_ - si * pr)
                # exact in exact arithmetic; drop the rounding dust
                a[2 * (p * n + q)] = a[2 * (p * n + q) + 1] = 0.0
                a[2 * (q * n + p)] = a[2 * (q * n + p) + 1] = 0.0
                a[2 * (p * n + p) + 1] = a[2 * (q * n + q) + 1] = 0.0
                for k in range(n):
                    kp = 2 * (k * n + p)
                    kq = 2 * (k * n + q)
                    pr, pi_, qr, qi = v[kp], v[kp + 1], v[kq], v[kq + 1]
                    v[kp] = c * pr - (sr * qr + si * qi)
                    v[kp + 1] = c * pi_ - (sr * qi - si * qr)
                    v[kq] = c * qr + (sr * pr - si * pi_)
                    v[kq + 1] = c * qi + (sr * pi_ + si * pr)
    else:
        converged = converged or _offdiag(a, n) <= thresh
    evals = array("d", (a[2 * (i * n + i)] for i in range(n)))
    return evals, v, converged


def roots_simultaneous(co, max_iter: int, rel_tol: float):
    """Simultaneous (Durand-Kerner) iteration for a monic polynomial.

    co holds interleaved coefficients, highest degree first, co[0:2] = 1.
    Starts from perturbed scaled roots of unity; a step is accepted when
    every update is below rel_tol relative to max(1, |root|).
    """
    deg = len(co) // 2 - 1
    if deg <= 0:
        return array("d"), True
    coeffs = [complex(co[2 * i], co[2 * i + 1]) for i in range(deg + 1)]
    radius = 1.0 + max(abs(c) for c in coeffs[1:])
    z = [radius * exp(1j * (2 * pi * k + 0.5) / deg) for k in range(deg)]
    converged = False
    for _ in range(max_iter):
        all_ok = True
        for k in range(deg):
            zk = z[k]
            pv = coeffs[0]
            bound = abs(coeffs[0])
            az = abs(zk)
            for c in coeffs[1:]:
                pv = pv * zk + c
                bound = bound * az + abs(c)
            denom = complex(1.0)
            for j in range(deg):
                if j != k:
                    denom *= zk - z[j]
            if denom == 0:
                z[k] = zk + complex(1e-8, 1e-8)
                all_ok = False
                continue
            step = pv / denom
            z[k] = zk - step
            # a multiple root keeps its iterates orbiting at the scatter
            # radius, so accept on tiny backward error as well
            if (abs(step) > rel_tol * max(1.0, abs(z[k]))
                    and abs(pv) > rel_tol * bound):
                all_ok = False
        if all_ok:
            converged = True
            break
    out = array("d", bytes(16 * deg))
    for k in range(deg):
        out[2 * k] = z[k].real
        out[2 * k + 1] = z[k].imag
    return out, converged
