"""Loop implementations of the curvature blocks, written for numba's njit.

Same contracts as np_blocks: inputs are the base curvature table
Rv[i,j,k,m] = <R(e_i,e_j)e_k, e_m> (e_0 = u) and the metric constants;
outputs are (horizontal, raw tangential) component tables over all frame
triples.  The module keeps the implementations un-decorated; the package
front end jits them when the numba backend is selected.
"""

from __future__ import annotations

import numpy as np

NAME = "numba"


def block_i_impl(rv, a, b, c, d, alpha, phi):
    n1 = rv.shape[0]
    tr = a + c + d
    ac = a + c
    horiz = np.zeros((n1, n1, n1, n1))
    tang = np.zeros((n1, n1, n1, n1))

    ju = np.zeros((n1, n1))
    q = np.zeros((n1, n1))
    for i in range(n1):
        for m in range(n1):
            ju[i, m] = rv[i, 0, 0, m]
            q[i, m] = rv[i, 0, m, 0]

    rru = np.zeros((n1, n1, n1, n1))  # rru[j,k,i,m] = (R(R(e_j,e_k)u,u)e_i)_m
    rr2 = np.zeros((n1, n1, n1, n1))  # rr2[i,j,k,m] = (R(e_i,u)R(e_j,u)e_k)_m
    b1a = np.zeros((n1, n1, n1, n1))  # b1a[i,j,k,m] = (R(e_i, R(e_j,u)e_k)u)_m
    pf = np.zeros((n1, n1, n1))  # pf[j,k,i] = <R(e_j,e_k)u, R_u e_i>
    q2 = np.zeros((n1, n1, n1))  # q2[j,k,i] = <R(e_j,u)e_k, R_u e_i>
    for j in range(n1):
        for k in range(n1):
            for i in range(n1):
                s_p = 0.0
                s_q = 0.0
                for p in range(n1):
                    s_p += rv[j, k, 0, p] * ju[i, p]
                    s_q += rv[j, 0, k, p] * ju[i, p]
                pf[j, k, i] = s_p
                q2[j, k, i] = s_q
                for m in range(n1):
                    s1 = 0.0
                    s2 = 0.0
                    s3 = 0.0
                    for p in range(n1):
                        s1 += rv[j, k, 0, p] * rv[p, 0, i, m]
                        s2 += rv[j, 0, k, p] * rv[i, 0, p, m]
                        s3 += rv[j, 0, k, p] * rv[i, p, 0, m]
                    rru[j, k, i, m] = s1
                    rr2[i, j, k, m] = s2
                    b1a[i, j, k, m] = s3

    c3 = (
        a * d * (b * b - alpha) / alpha
        + 2.0 * b * b * d * (phi + 2.0 * b * b) / (phi * tr)
        + 4.0 * b * b * alpha / phi
    )
    for i in range(n1):
        d0i = 1.0 if i == 0 else 0.0
        for j in range(n1):
            d0j = 1.0 if j == 0 else 0.0
            for k in range(n1):
                d0k = 1.0 if k == 0 else 0.0
                djk = 1.0 if j == k else 0.0
                dik = 1.0 if i == k else 0.0
                w_jac_jk = -(a * d + b * b) / tr * q[j, k] + d * d0j * d0k
                w_jac_ik = -(a * d + b * b) / tr * q[i, k] + d * d0i * d0k
                w_id_jk = -2.0 * b * b / tr * q[j, k] + d * d0j * d0k
                w_id_ik = -2.0 * b * b / tr * q[i, k] + d * d0i * d0k
                s6 = (
                    a * a * (pf[j, k, i] - pf[i, k, j] - 2.0 * pf[i, j, k])
                    + a * a * b * b / alpha
                    * (q2[j, k, i] + q2[k, j, i] - q2[i, k, j] - q2[k, i, j])
                    - c3 * (d0i * q[j, k] - d0j * q[i, k])
                    - 3.0 * a * ac * rv[i, j, k, 0]
                    + ac * d * (d0i * djk - d0j * dik)
                )
                for m in range(n1):
                    dim = 1.0 if i == m else 0.0
                    djm = 1.0 if j == m else 0.0
                    d0m = 1.0 if m == 0 else 0.0
                    h_val = (
                        rv[i, j, k, m]
                        + a * a / (4.0 * alpha)
                        * (rru[j, k, i, m] - rru[i, k, j, m] - 2.0 * rru[i, j, k, m])
                        + a * a * b * b / (4.0 * alpha * alpha)
                        * (rr2[i, j, k, m] - rr2[j, i, k, m] + rr2[i, k, j, m] - rr2[j, k, i, m])
                        + a * d * (alpha - b * b) / (4.0 * alpha * alpha)
                        * (d0k * rv[i, j, 0, m] + d0j * rv[i, 0, k, m] - d0i * rv[j, 0, k, m])
                        + a * b * b / (2.0 * alpha * alpha)
                        * (w_jac_jk * ju[i, m] - w_jac_ik * ju[j, m])
                        + d / (4.0 * alpha) * (w_id_jk * dim - w_id_ik * djm)
                        + d / (4.0 * alpha * tr) * s6 * d0m
                    )
                    t_val = (
                        -a * b / (4.0 * alpha)
                        * (
                            rru[j, k, i, m] - rru[i, k, j, m] - 2.0 * rru[i, j, k, m]
                            - b1a[i, j, k, m] - b1a[i, k, j, m]
                            + b1a[j, i, k, m] + b1a[j, k, i, m]
                        )
                        - a * b**3 / (4.0 * alpha * alpha)
                        * (rr2[i, j, k, m] - rr2[j, i, k, m] + rr2[i, k, j, m] - rr2[j, k, i, m])
                        - b * d * (3.0 * alpha - b * b) / (4.0 * alpha * alpha)
                        * (d0k * rv[i, j, 0, m] + d0j * rv[i, 0, k, m] - d0i * rv[j, 0, k, m])
                        - b * (b * b - alpha) / (2.0 * alpha * alpha)
                        * (w_jac_jk * ju[i, m] - w_jac_ik * ju[j, m])
                        + ac * b * d / (2.0 * alpha * tr) * (q[j, k] * dim - q[i, k] * djm)
                    )
                    horiz[i, j, k, m] = h_val
                    tang[i, j, k, m] = t_val
    return horiz, tang


def block_ii_impl(rv, a, b, c, d, alpha, phi):
    n1 = rv.shape[0]
    tr = a + c + d
    ac = a + c
    horiz = np.zeros((n1, n1, n1, n1))
    tang = np.zeros((n1, n1, n1, n1))

    ju = np.zeros((n1, n1))
    q = np.zeros((n1, n1))
    for i in range(n1):
        for m in range(n1):
            ju[i, m] = rv[i, 0, 0, m]
            q[i, m] = rv[i, 0, m, 0]

    rr2 = np.zeros((n1, n1, n1, n1))
    b1a = np.zeros((n1, n1, n1, n1))
    q2 = np.zeros((n1, n1, n1))
    for j in range(n1):
        for k in range(n1):
            for i in range(n1):
                s_q = 0.0
                for p in range(n1):
                    s_q += rv[j, 0, k, p] * ju[i, p]
                q2[j, k, i] = s_q
                for m in range(n1):
                    s2 = 0.0
                    s3 = 0.0
                    for p in range(n1):
                        s2 += rv[j, 0, k, p] * rv[i, 0, p, m]
                        s3 += rv[j, 0, k, p] * rv[i, p, 0, m]
                    rr2[i, j, k, m] = s2
                    b1a[i, j, k, m] = s3

    for i in range(n1):
        d0i = 1.0 if i == 0 else 0.0
        for j in range(n1):
            for k in range(n1):
                d0k = 1.0 if k == 0 else 0.0
                djk = 1.0 if j == k else 0.0
                dij = 1.0 if i == j else 0.0
                w_jac_i = a * (a * d + b * b) * q[j, k] + alpha * d * djk
                w_jac_j = (a * d + b * b) / tr * q[i, k] - d * d0i * d0k
                w_id_i = a * q[j, k] + (2.0 * ac + d) * djk
                w_id_j = -(a * d + b * b) / (2.0 * tr) * q[i, k] + d * d0i * d0k
                s9 = (
                    a**3 * b / alpha * (q2[j, k, i] - q2[i, k, j] - q2[k, i, j])
                    + a * b * (-(alpha + phi) / alpha + d / tr) * d0i * q[j, k]
                    - 2.0 * a * b * (2.0 * rv[i, j, k, 0] + rv[k, j, i, 0])
                    + b * d * ((3.0 - d / tr) * d0i * djk + 2.0 * d0k * dij)
                )
                for m in range(n1):
                    dim = 1.0 if i == m else 0.0
                    djm = 1.0 if j == m else 0.0
                    dkm = 1.0 if k == m else 0.0
                    d0m = 1.0 if m == 0 else 0.0
                    h_val = (
                        a * b / (2.0 * alpha) * (rv[i, j, k, m] + rv[k, j, i, m])
                        + a**3 * b / (4.0 * alpha * alpha)
                        * (rr2[i, j, k, m] - rr2[j, i, k, m] - rr2[j, k, i, m])
                        + a * a * b * d / (4.0 * alpha * alpha)
                        * (d0i * rv[j, 0, k, m] - d0k * rv[i, j, 0, m])
                        - a * b / (4.0 * alpha * alpha * tr) * w_jac_i * ju[i, m]
                        + a * a * b / (2.0 * alpha * alpha) * w_jac_j * ju[j, m]
                        - b * d / (4.0 * alpha * tr) * w_id_i * dim
                        + b / alpha * w_id_j * djm
                        - b * d / (2.0 * alpha) * dij * dkm
                        + d / (4.0 * alpha * tr) * s9 * d0m
                    )
                    t_val = (
                        a * a / (4.0 * alpha) * b1a[i, j, k, m]
                        - a * a * b * b / (4.0 * alpha * alpha)
                        * (rr2[i, j, k, m] - rr2[j, i, k, m] - rr2[j, k, i, m])
                        - b * b / alpha * rv[i, j, k, m]
                        + a * ac / (2.0 * alpha) * rv[i, k, j, m]
                        + a * d * (alpha - b * b) / (4.0 * alpha * alpha)
                        * (d0i * rv[j, 0, k, m] - d0k * rv[i, j, 0, m])
                        - (alpha - b * b) / (4.0 * alpha * alpha * tr) * w_jac_i * ju[i, m]
                        - a * b * b / (2.0 * alpha * alpha) * w_jac_j * ju[j, m]
                        + ac * d / (4.0 * alpha * tr) * w_id_i * dim
                        + 1.0 / (4.0 * alpha)
                        * (
                            2.0 * b * b * (2.0 - d / tr) * q[i, k]
                            - d * (4.0 * ac + d) * d0i * d0k
                        )
                        * djm
                        + ac * d / (2.0 * alpha) * dij * dkm
                    )
                    horiz[i, j, k, m] = h_val
                    tang[i, j, k, m] = t_val
    return horiz, tang


def block_iii_impl(rv, a, b, c, d, alpha, phi):
    n1 = rv.shape[0]
    tr = a + c + d
    ac = a + c
    horiz = np.zeros((n1, n1, n1, n1))
    tang = np.zeros((n1, n1, n1, n1))
    coef = 1.0 / (2.0 * alpha * tr)
    id_coef = ac * (alpha + phi) + alpha * d
    for i in range(n1):
        for j in range(n1):
            for k in range(n1):
                djk = 1.0 if j == k else 0.0
                dik = 1.0 if i == k else 0.0
                for m in range(n1):
                    dim = 1.0 if i == m else 0.0
                    djm = 1.0 if j == m else 0.0
                    jac_pair = djk * rv[i, 0, 0, m] - dik * rv[j, 0, 0, m]
                    id_pair = djk * dim - dik * djm
                    horiz[i, j, k, m] = coef * (
                        a * a * b * jac_pair - b * (alpha + phi) * id_pair
                    )
                    tang[i, j, k, m] = coef * (-a * b * b * jac_pair + id_coef * id_pair)
    return horiz, tang
