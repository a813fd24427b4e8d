# cython: language_level=3
"""Compiled numeric kernels; drop-in replacements for _pure."""

from array import array

from libc.math cimport atan2, cos, hypot, sin, sqrt, M_PI


def zeros(Py_ssize_t n):
    return array("d", bytes(16 * n))


def matmul(object a_, object b_, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef double[::1] a = a_
    cdef double[::1] b = b_
    out_ = zeros(n * m)
    cdef double[::1] out = out_
    cdef Py_ssize_t i, t, j, ar_, or_, br_
    cdef double xr, xi, yr, yi
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
    return out_


def cap_apply(object src_, Py_ssize_t cols, Py_ssize_t nn, Py_ssize_t left,
              Py_ssize_t right, object e_):
    cdef double[::1] src = src_
    cdef double[::1] e = e_
    out_ = zeros(left * right * cols)
    cdef double[::1] out = out_
    cdef Py_ssize_t aa, bb, l, r, c, s, o, sbase, obase, w = 2 * cols
    cdef double er, ei, xr, xi
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
    return out_


def cup_apply(object src_, Py_ssize_t cols, Py_ssize_t nn, Py_ssize_t left,
              Py_ssize_t right, object d_):
    cdef double[::1] src = src_
    cdef double[::1] d = d_
    out_ = zeros(left * nn * nn * right * cols)
    cdef double[::1] out = out_
    cdef Py_ssize_t aa, bb, l, r, c, s, o, sbase, obase, w = 2 * cols
    cdef double dr, di, xr, xi
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
    return out_


cdef double _offdiag(double[::1] a, Py_ssize_t n):
    cdef double s = 0.0
    cdef Py_ssize_t p, q
    for p in range(n):
        for q in range(n):
            if p != q:
                s += a[2 * (p * n + q)] ** 2 + a[2 * (p * n + q) + 1] ** 2
    return sqrt(s)


def jacobi_eigh(object h_, Py_ssize_t n, double rel_tol, int max_sweeps):
    a_ = array("d", h_)
    cdef double[::1] a = a_
    v_ = zeros(n * n)
    cdef double[::1] v = v_
    cdef double[::1] h = h_
    cdef Py_ssize_t i, p, q, k, kp, kq, pk, qk, sweep
    cdef double frob = 0.0, thresh, bre, bim, mag, app, aqq, theta, c
    cdef double ur, ui, sr, si, pr, pi_, qr, qi
    cdef bint converged
    for i in range(n):
        v[2 * (i * n + i)] = 1.0
    for i in range(2 * n * n):
        frob += h[i] * h[i]
    frob = sqrt(frob)
    thresh = rel_tol * frob
    converged = frob == 0.0 or n < 2
    for sweep in range(max_sweeps):
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
                for k in range(n):
                    kp = 2 * (k * n + p)
                    kq = 2 * (k * n + q)
                    pr = a[kp]; pi_ = a[kp + 1]; qr = a[kq]; qi = a[kq + 1]
                    a[kp] = c * pr - (sr * qr + si * qi)
                    a[kp + 1] = c * pi_ - (sr * qi - si * qr)
                    a[kq] = c * qr + (sr * pr - si * pi_)
                    a[kq + 1] = c * qi + (sr * pi_ + si * pr)
                for k in range(n):
                    pk = 2 * (p * n + k)
                    qk = 2 * (q * n + k)
                    pr = a[pk]; pi_ = a[pk + 1]; qr = a[qk]; qi = a[qk + 1]
                    a[pk] = c * pr - (sr * qr - si * qi)
                    a[pk + 1] = c * pi_ - (sr * qi + si * qr)
                    a[qk] = c * qr + (sr * pr + si * pi_)
                    a[qk + 1] = c * qi + (sr * pi_ - si * pr)
                a[2 * (p * n + q)] = 0.0
                a[2 * (p * n + q) + 1] = 0.0
                a[2 * (q * n + p)] = 0.0
                a[2 * (q * n + p) + 1] = 0.0
                a[2 * (p * n + p) + 1] = 0.0
                a[2 * (q * n + q) + 1] = 0.0
                for k in range(n):
                    kp = 2 * (k * n + p)
                    kq = 2 * (k * n + q)
                    pr = v[kp]; pi_ = v[kp + 1]; qr = v[kq]; qi = v[kq + 1]
                    v[kp] = c * pr - (sr * qr + si * qi)
                    v[kp + 1] = c * pi_ - (sr * qi - si * qr)
                    v[kq] = c * qr + (sr * pr - si * pi_)
                    v[kq + 1] = c * qi + (sr * pi_ + si * pr)
    else:
        converged = converged or _offdiag(a, n) <= thresh
    evals = array("d", bytes(8 * n))
    cdef double[::1] ev = evals
    for i in range(n):
        ev[i] = a[2 * (i * n + i)]
    return evals, v_, converged


def roots_simultaneous(object co_, int max_iter, double rel_tol):
    cdef double[::1] co = co_
    cdef Py_ssize_t deg = len(co_) // 2 - 1
    if deg <= 0:
        return array("d"), True
    z_ = array("d", bytes(16 * deg))
    cdef double[::1] z = z_
    cdef Py_ssize_t i, k, j
    cdef double radius = 0.0, mag, ang, az, bound
    cdef double pvr, pvi, tr, dr, di, zr, zi, sr, si, den, rel
    cdef bint converged = False, all_ok
    for i in range(1, deg + 1):
        mag = hypot(co[2 * i], co[2 * i + 1])
        if mag > radius:
            radius = mag
    radius += 1.0
    for k in range(deg):
        ang = (2.0 * M_PI * k + 0.5) / deg
        z[2 * k] = radius * cos(ang)
        z[2 * k + 1] = radius * sin(ang)
    for i in range(max_iter):
        all_ok = True
        for k in range(deg):
            zr = z[2 * k]
            zi = z[2 * k + 1]
            az = hypot(zr, zi)
            pvr = co[0]; pvi = co[1]
            bound = hypot(co[0], co[1])
            for j in range(1, deg + 1):
                tr = pvr * zr - pvi * zi + co[2 * j]
                pvi = pvr * zi + pvi * zr + co[2 * j + 1]
                pvr = tr
                bound = bound * az + hypot(co[2 * j], co[2 * j + 1])
            dr = 1.0; di = 0.0
            for j in range(deg):
                if j != k:
                    tr = dr * (zr - z[2 * j]) - di * (zi - z[2 * j + 1])
                    di = dr * (zi - z[2 * j + 1]) + di * (zr - z[2 * j])
                    dr = tr
            den = dr * dr + di * di
            if den == 0.0:
                z[2 * k] = zr + 1e-8
                z[2 * k + 1] = zi + 1e-8
                all_ok = False
                continue
            sr = (pvr * dr + pvi * di) / den
            si = (pvi * dr - pvr * di) / den
            z[2 * k] = zr - sr
            z[2 * k + 1] = zi - si
            rel = hypot(z[2 * k], z[2 * k + 1])
            if rel < 1.0:
                rel = 1.0
            # multiple roots orbit at the scatter radius; tiny backward
            # error is as converged as they get
            if (hypot(sr, si) > rel_tol * rel
                    and hypot(pvr, pvi) > rel_tol * bound):
                all_ok = False
        if all_ok:
            converged = True
            break
    return z_, converged
