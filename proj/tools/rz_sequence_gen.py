#!/usr/bin/env python3
# Copyright 2026 The taco authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Offline generator of high-precision RZ approximation sequences.

Produces sidecar synthesis files (lines: <angle> <epsilon> <letters>) in the
GridSynth letter format, via a Ross-Selinger style grid search over
Z[omega]: find z close to exp(-i*theta/2) on the scaled unit circle, solve
|w|^2 = 2^k - |z|^2 with a norm-equation solve in Z[omega] (prime-norm
heuristic), then peel the resulting exact unitary into letters with an
exact SO(3) parity descent.

This is a development utility for producing test fixtures; the toolchain
itself only ingests its output.

Usage: rz_sequence_gen.py <epsilon> <angle-expr> [<angle-expr> ...]
"""

import math
import random
import sys
from fractions import Fraction

import sympy

# ---------------------------------------------------------------------
# Z[omega] arithmetic: x = (a, b, c, d) means a + b w + c w^2 + d w^3,
# w = exp(i pi/4).

SQRT2 = math.sqrt(2.0)


def zw_mul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2,
        a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
        a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2,
        a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
    )


def zw_add(x, y):
    return tuple(p + q for p, q in zip(x, y))


def zw_sub(x, y):
    return tuple(p - q for p, q in zip(x, y))


def zw_neg(x):
    return tuple(-p for p in x)


def zw_conj(x):  # complex conjugation
    a, b, c, d = x
    return (a, -d, -c, -b)


def zw_bullet(x):  # sqrt(2) -> -sqrt(2) Galois conjugate
    a, b, c, d = x
    return (a, -b, c, -d)


def zw_norm_z_sqrt2(x):
    """x * conj(x) as an element (p, q) of Z[sqrt2]: p + q sqrt(2)."""
    m = zw_mul(x, zw_conj(x))
    a, b, c, d = m
    assert c == 0 and b == -d, f"norm not real: {m}"
    return (a, b)


def zw_complex(x):
    a, b, c, d = x
    return complex(a + (b - d) / SQRT2, c + (b + d) / SQRT2)


def zs_mul(x, y):  # Z[sqrt2] product
    p1, q1 = x
    p2, q2 = y
    return (p1 * p2 + 2 * q1 * q2, p1 * q2 + q1 * p2)


def zs_norm(x):  # to Z: p^2 - 2 q^2
    p, q = x
    return p * p - 2 * q * q


def zs_value(x):
    return x[0] + x[1] * SQRT2


# ---------------------------------------------------------------------
# Euclidean division and gcd in Z[omega] (norm-Euclidean).


def zw_abs_norm(x):
    return zs_norm(zw_norm_z_sqrt2(x))


def zw_divmod(x, y):
    """Nearest-quotient division: returns q with N(x - q y) < N(y)."""
    ny = zw_abs_norm(y)
    assert ny != 0
    # x / y = x * conj(y) * bullet(y * conj(y)) / N(y)
    yc = zw_conj(y)
    num = zw_mul(x, yc)
    nyz = zw_norm_z_sqrt2(y)  # y conj(y) in Z[sqrt2]
    nyz_bullet = (nyz[0], -nyz[1])
    num = zw_mul(num, (nyz_bullet[0], nyz_bullet[1], 0, -nyz_bullet[1]))
    q = tuple(round(Fraction(v, ny)) for v in num)
    return q


def zw_gcd(x, y):
    while zw_abs_norm(y) != 0:
        q = zw_divmod(x, y)
        r = zw_sub(x, zw_mul(q, y))
        x, y = y, r
        if zw_abs_norm(y) >= zw_abs_norm(x) and zw_abs_norm(y) != 0:
            # Nearest rounding guarantees strict descent; guard anyway.
            raise ArithmeticError("gcd descent failed")
    return x


# ---------------------------------------------------------------------
# Norm equation |w|^2 = xi over Z[omega], xi in Z[sqrt2], via the
# prime-norm heuristic: the caller only supplies xi whose rational norm
# is 0, 1, 2 or an odd prime.


def solve_norm_equation(xi):
    p, q = xi
    n = zs_norm(xi)
    if p == 0 and q == 0:
        return (0, 0, 0, 0)
    if n < 0:
        return None
    if zs_value(xi) < 0 or zs_value((p, -q)) < 0:
        return None

    if n == 1:
        # xi is a totally positive unit: (1+sqrt2)^(2m) = (3+2sqrt2)^m.
        w = (1, 0, 0, 0)
        lam = (0, 1, 0, -1)  # sqrt2 ... we need (1+sqrt2) as Z[omega]
        lam = (1, 1, 0, -1)
        cur = xi
        while cur != (1, 0):
            if zs_value(cur) > 1:
                # divide by 3+2sqrt2
                cur = zs_mul(cur, (3, -2))
                w = zw_mul(w, lam)
            else:
                cur = zs_mul(cur, (3, 2))
                w = zw_mul(w, zw_inv_unit(lam))
        return w
    if n == 2:
        # xi = sqrt2 * unit; sqrt2 = delta * conj(delta) with delta = 1+w?
        # |1+w|^2 = (1+w)(1+conj w) = 2 + w + conj w = 2 + sqrt2.
        # Use delta = w - w^3? |sqrt2|^2 = 2. Try w0 = (0,1,0,0)+(1,0,0,0):
        w0 = (1, 1, 0, 0)
        return finish_unit_adjust(w0, xi)
    if not sympy.isprime(n):
        return None
    if n == 2:
        return None
    if n % 8 == 1:
        t = sympy.ntheory.sqrt_mod(-1, n)
        if t is None:
            return None
        w0 = zw_gcd((int(t), 0, 1, 0), (n, 0, 0, 0))  # gcd(t + i, n)
        w0 = zw_gcd(w0, xi_to_zw(xi))
    elif n % 8 == 7:
        t = sympy.ntheory.sqrt_mod(-2, n)
        if t is None:
            return None
        w0 = zw_gcd((int(t), 1, 0, 1), (n, 0, 0, 0))  # gcd(t + i*sqrt2, n)
        w0 = zw_gcd(w0, xi_to_zw(xi))
    else:
        return None
    return finish_unit_adjust(w0, xi)


def xi_to_zw(xi):
    p, q = xi
    return (p, q, 0, -q)


def zw_inv_unit(u):
    """Inverse of a unit of Z[omega] (norm +-1)."""
    uc = zw_conj(u)
    nz = zw_norm_z_sqrt2(u)  # unit of Z[sqrt2]
    nzb = (nz[0], -nz[1])
    n = zs_norm(nz)
    w = zw_mul(uc, (nzb[0], nzb[1], 0, -nzb[1]))
    if n == -1:
        w = zw_neg(w)
    return w


def finish_unit_adjust(w0, xi):
    """Scale w0 by a real unit so w0 * conj(w0) == xi exactly."""
    if zw_abs_norm(w0) == 0:
        return None
    nz = zw_norm_z_sqrt2(w0)
    # r = xi / nz must be a totally positive unit (3+2sqrt2)^m.
    num = zs_mul(xi, (nz[0], -nz[1]))
    den = zs_norm(nz)
    if den == 0 or num[0] % den or num[1] % den:
        return None
    r = (num[0] // den, num[1] // den)
    if zs_norm(r) != 1:
        return None
    rv = zs_value(r)
    if rv <= 0 or zs_value((r[0], -r[1])) <= 0:
        return None
    w = w0
    lam = (1, 1, 0, -1)  # 1 + sqrt2
    guard = 0
    while r != (1, 0):
        guard += 1
        if guard > 200:
            return None
        if zs_value(r) > 1:
            r = zs_mul(r, (3, -2))
            w = zw_mul(w, lam)
        else:
            r = zs_mul(r, (3, 2))
            w = zw_mul(w, zw_inv_unit(lam))
    if zw_norm_z_sqrt2(w) != xi:
        return None
    return w


# ---------------------------------------------------------------------
# Exact SO(3) descent: peel T / HT / SHT off an exact unitary given as
# entries (z, w, k) -> letters. Mirrors the production normalizer.


def mat_mul(x, y):
    return (
        zw_add(zw_mul(x[0], y[0]), zw_mul(x[1], y[2])),
        zw_add(zw_mul(x[0], y[1]), zw_mul(x[1], y[3])),
        zw_add(zw_mul(x[2], y[0]), zw_mul(x[3], y[2])),
        zw_add(zw_mul(x[2], y[1]), zw_mul(x[3], y[3])),
    )


def mat_adj(x):
    return (zw_conj(x[0]), zw_conj(x[2]), zw_conj(x[1]), zw_conj(x[3]))


GATES = {
    "H": ((1, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 0), (-1, 0, 0, 0)),  # times 1/sqrt2
    "S": ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 1, 0)),
    "T": ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 1, 0, 0)),
    "X": ((0, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 0), (0, 0, 0, 0)),
}
GATE_K = {"H": 1, "S": 0, "T": 0, "X": 0}


def word_matrix(word):
    m = ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0))
    k = 0
    for ch in word:
        m = mat_mul(m, GATES[ch])
        k += GATE_K[ch]
    return m, k


class Ring:
    """Reduced (a,b,c,d)/sqrt2^k element for the SO(3) descent."""

    __slots__ = ("v", "k")

    def __init__(self, v, k):
        a, b, c, d = v
        while k > 0 and (a - c) % 2 == 0 and (b - d) % 2 == 0:
            a, b, c, d = (b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2
            k -= 1
        if a == b == c == d == 0:
            k = 0
        self.v = (a, b, c, d)
        self.k = k


def bloch(mat, k):
    """Exact SO(3) matrix of (mat / sqrt2^k) as 9 reduced Ring entries."""
    paulis = [GATES["X"],
              ((0, 0, 0, 0), (0, 0, -1, 0), (0, 0, 1, 0), (0, 0, 0, 0)),  # Y
              ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (-1, 0, 0, 0))]  # Z
    adj = mat_adj(mat)
    rows = []
    for si in paulis:
        si_m = (zw_mul(si[0], mat[0]), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0))
        # general 2x2: si * mat
        si_m = mat_mul(si, mat)
        for sj in paulis:
            a = mat_mul(mat_mul(si_m, sj), adj)
            tr = zw_add(a[0], a[3])
            assert tr[2] == 0 and tr[1] == -tr[3], "non-real Bloch entry"
            # divide by 2 * 2^k (the two sqrt2^k denominators) => k' = 2k+4? no:
            # entry = tr / (2 * 2^k) = tr / sqrt2^(2k+2)
            rows.append(Ring(tr, 2 * k + 2))
    return rows


def bloch_mul(x, y):
    out = []
    for i in range(3):
        for j in range(3):
            acc_v, acc_k = (0, 0, 0, 0), 0
            for m in range(3):
                e1, e2 = x[3 * i + m], y[3 * m + j]
                v = zw_mul(e1.v, e2.v)
                k = e1.k + e2.k
                if acc_k < k:
                    # scale acc up
                    for _ in range(k - acc_k):
                        a, b, c, d = acc_v
                        acc_v = (b - d, a + c, b + d, c - a)
                    acc_k = k
                elif k < acc_k:
                    for _ in range(acc_k - k):
                        a, b, c, d = v
                        v = (b - d, a + c, b + d, c - a)
                acc_v = zw_add(acc_v, v)
            out.append(Ring(acc_v, acc_k))
    return out


def parity_vec(rows):
    kmax = max(e.k for e in rows)
    vec = []
    for i in range(3):
        n = 0
        for j in range(3):
            e = rows[3 * i + j]
            if e.k == kmax and e.v[0] % 2:
                n += 1
        vec.append(n)
    return tuple(vec)


PEELS = {}


def init_peels():
    for name in ("T", "HT", "SHT"):
        m, k = word_matrix(name)
        PEELS[name] = bloch(mat_adj(m), k)


CLIFF_WORDS = []


def init_cliffords():
    # BFS closure of {H, S} words; keep the shortest word per SO(3) matrix.
    seen = {}
    queue = [""]
    while queue:
        wtxt = queue.pop(0)
        m, k = word_matrix(wtxt)
        key = tuple((e.v, e.k) for e in bloch(m, k))
        if key in seen:
            continue
        seen[key] = wtxt
        if len(seen) <= 24:
            for g in ("H", "S"):
                queue.append(wtxt + g)
    assert len(seen) >= 24
    CLIFF_WORDS.extend(seen.items())


def letters_of(mat, k):
    if not PEELS:
        init_peels()
        init_cliffords()
    r = bloch(mat, k)
    out = []
    guard = 0
    while True:
        guard += 1
        assert guard < 4000, "descent stuck"
        pv = parity_vec(r)
        if pv == (1, 1, 1):
            break
        if pv == (2, 2, 0):
            out.append("T")
            r = bloch_mul(PEELS["T"], r)
        elif pv == (0, 2, 2):
            out.append("HT")
            r = bloch_mul(PEELS["HT"], r)
        elif pv == (2, 0, 2):
            out.append("SHT")
            r = bloch_mul(PEELS["SHT"], r)
        else:
            raise AssertionError(f"unexpected parity {pv}")
    key = tuple((e.v, e.k) for e in r)
    for ck, cw in CLIFF_WORDS:
        if ck == key:
            return "".join(out) + cw
    raise AssertionError("residual Clifford not found")


# ---------------------------------------------------------------------
# The grid search proper.


def enumerate_candidates(theta, eps, k):
    """All z in Z[omega] inside the closeness sliver at scale sqrt2^k
    whose Galois conjugate lies in the centered disk of radius 0.8 R.

    The sliver is the set of z with dot(z, e^{-i theta/2}) within eps^2 R
    of R (and |z| <= R); its bounding box is far thinner than the lattice
    spacing, so the region is swept exactly: the (re z, re z*) pairs live
    on a Z[sqrt2] grid indexed by (a, b-d), and for each the (im z, im z*)
    pairs on the grid indexed by (c, b+d) with a parity tie.
    """
    R = 2 ** (k / 2.0)
    cx, cy = math.cos(-theta / 2.0), math.sin(-theta / 2.0)
    dmin = (1.0 - 0.98 * eps * eps) * R
    tmax = math.sqrt(2.0) * eps * R * 1.02
    conj_r = 0.8 * R

    # Bounding box of the sliver (convex hull of its four corners).
    xs, ys = [], []
    for depth in (dmin, R):
        for trans in (-tmax, tmax):
            xs.append(depth * cx - trans * cy)
            ys.append(depth * cy + trans * cx)
    rx_lo, rx_hi = min(xs) - 1e-9, max(xs) + 1e-9

    out = []
    e_lo = int(math.floor((rx_lo - conj_r) / SQRT2))
    e_hi = int(math.ceil((rx_hi + conj_r) / SQRT2))
    two_k = 1 << k
    for e in range(e_lo, e_hi + 1):  # e = b - d
        a_lo = int(math.ceil(rx_lo - e / SQRT2 - 1e-12))
        a_hi = int(math.floor(rx_hi - e / SQRT2 + 1e-12))
        for a in range(a_lo, a_hi + 1):
            re = a + e / SQRT2
            re_c = a - e / SQRT2
            if abs(re_c) > conj_r:
                continue
            # Interval of im admissible at this re.
            im_lo, im_hi = -R, R
            if abs(cy) > 1e-12:
                lo = (dmin - re * cx) / cy
                hi = (R - re * cx) / cy
                if lo > hi:
                    lo, hi = hi, lo
                im_lo, im_hi = max(im_lo, lo), min(im_hi, hi)
            if abs(cx) > 1e-12:
                lo = (-tmax + re * cy) / cx
                hi = (tmax + re * cy) / cx
                if lo > hi:
                    lo, hi = hi, lo
                im_lo, im_hi = max(im_lo, lo), min(im_hi, hi)
            if im_lo > im_hi:
                continue
            conj_im = math.sqrt(max(0.0, conj_r * conj_r - re_c * re_c))
            f_lo = int(math.floor((im_lo - conj_im) / SQRT2))
            f_hi = int(math.ceil((im_hi + conj_im) / SQRT2))
            for f in range(f_lo, f_hi + 1):  # f = b + d
                if (f ^ e) & 1:
                    continue
                c_lo = int(math.ceil(im_lo - f / SQRT2 - 1e-12))
                c_hi = int(math.floor(im_hi - f / SQRT2 + 1e-12))
                for c2 in range(c_lo, c_hi + 1):
                    im_c = c2 - f / SQRT2
                    if abs(im_c) > conj_im:
                        continue
                    z = (a, (e + f) // 2, c2, (f - e) // 2)
                    # Exact feasibility of the completion norm.
                    zz = zw_norm_z_sqrt2(z)
                    xi = (two_k - zz[0], -zz[1])
                    if zs_value(xi) < 0 or zs_value((xi[0], -xi[1])) < 0:
                        continue
                    zc = zw_complex(z)
                    dot = zc.real * cx + zc.imag * cy
                    if dot < (1.0 - eps * eps) * R:
                        continue
                    out.append((z, xi))
    return out


def synthesize(theta, eps, seed=0):
    del seed  # deterministic enumeration
    # Solutions appear once eps^3 * 4^k is order one.
    kmin = max(2, int(math.ceil(1.5 * math.log2(1.0 / eps))) - 2)
    for k in range(kmin, kmin + 40):
        for z, xi in enumerate_candidates(theta, eps, k):
            w = solve_norm_equation(xi)
            if w is None:
                continue
            mat = (z, zw_neg(zw_conj(w)), w, zw_conj(z))
            return letters_of(mat, k)
    raise RuntimeError(f"no solution for theta={theta} eps={eps}")


def angle_value(expr):
    expr = expr.strip()
    val = sympy.sympify(expr.replace("pi", "(pi)"), locals={"pi": sympy.pi})
    return float(val)


def main():
    if len(sys.argv) < 3:
        print(__doc__)
        sys.exit(1)
    eps = float(sys.argv[1])
    for expr in sys.argv[2:]:
        theta = angle_value(expr)
        word = synthesize(theta, eps)
        # Verify numerically before emitting.
        m = [[1, 0], [0, 1]]
        mats = {
            "H": [[1 / SQRT2, 1 / SQRT2], [1 / SQRT2, -1 / SQRT2]],
            "S": [[1, 0], [0, 1j]],
            "T": [[1, 0], [0, complex(math.cos(math.pi / 4), math.sin(math.pi / 4))]],
            "X": [[0, 1], [1, 0]],
        }
        for ch in word:
            g = mats[ch]
            m = [[m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]],
                 [m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]]]
        tr = m[0][0] * complex(math.cos(theta / 2), math.sin(theta / 2)) + \
             m[1][1] * complex(math.cos(theta / 2), -math.sin(theta / 2))
        dist = math.sqrt(max(0.0, 1.0 - abs(tr) / 2.0))
        if dist > eps:
            raise RuntimeError(f"verification failed for {expr}: d={dist}")
        print(f"{expr} {eps:g} {word}", flush=True)
        print(f"# {expr}: {len([c for c in word if c == 'T'])} T, d={dist:.3g}",
              file=sys.stderr, flush=True)


if __name__ == "__main__":
    main()
