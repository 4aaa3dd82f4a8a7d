"""Vectorized (einsum) evaluation of the three curvature blocks of T1M.

Inputs: the base curvature table Rv[i,j,k,m] = <R(e_i,e_j)e_k, e_m> in the
adapted frame (e_0 = u) and the metric constants.  Each block returns the
horizontal and raw tangential output components for all frame triples; the
raw tangential vectors may carry a u-component which the assembler routes
through the tangential-lift rule.

Intermediate contractions:
  RRu[j,k,i,m] = (R(R(e_j,e_k)u, u) e_i)_m
  RR2[i,j,k,m] = (R(e_i,u) R(e_j,u) e_k)_m
  B1[i,j,k,m]  = (R(e_i, R(e_j,u)e_k) u)_m
  P[j,k,i]     = <R(e_j,e_k)u, R_u e_i>
  Q2[j,k,i]    = <R(e_j,u)e_k, R_u e_i>
  q[i,k]       = <R(e_i,u)e_k, u>
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def _intermediates(rv: np.ndarray):
    ju = rv[:, 0, 0, :]
    q = rv[:, 0, :, 0]
    rr_u = np.einsum("jkp,pim->jkim", rv[:, :, 0, :], rv[:, 0, :, :])
    rr2 = np.einsum("jkp,ipm->ijkm", rv[:, 0, :, :], rv[:, 0, :, :])
    b1 = np.einsum("jkp,ipm->ijkm", rv[:, 0, :, :], rv[:, :, 0, :])
    p_form = np.einsum("jkp,ip->jki", rv[:, :, 0, :], ju)
    q2 = np.einsum("jkp,ip->jki", rv[:, 0, :, :], ju)
    return ju, q, rr_u, rr2, b1, p_form, q2


def block_i(rv: np.ndarray, a: float, b: float, c: float, d: float, alpha: float, phi: float):
    """R(X^h, Y^h)Z^h for all frame triples: (horizontal, raw tangential)."""
    n1 = rv.shape[0]
    tr = a + c + d
    ac = a + c
    eye = np.eye(n1)
    d0 = eye[0]
    ju, q, rr_u, rr2, b1, p_form, q2 = _intermediates(rv)

    rru_comb = (
        rr_u.transpose(2, 0, 1, 3) - rr_u.transpose(0, 2, 1, 3) - 2.0 * rr_u
    )  # [i,j,k,m]: RRu[j,k,i] - RRu[i,k,j] - 2 RRu[i,j,k]
    rr2_comb4 = (
        rr2 - rr2.transpose(1, 0, 2, 3) + rr2.transpose(0, 2, 1, 3) - rr2.transpose(2, 0, 1, 3)
    )  # RR2[i,j,k] - RR2[j,i,k] + RR2[i,k,j] - RR2[j,k,i]
    # d0[k]*Rv[i,j,0,m] + d0[j]*Rv[i,0,k,m] - d0[i]*Rv[j,0,k,m]
    proj_comb = (
        np.einsum("k,ijm->ijkm", d0, rv[:, :, 0, :])
        + np.einsum("j,ikm->ijkm", d0, rv[:, 0, :, :])
        - np.einsum("i,jkm->ijkm", d0, rv[:, 0, :, :])
    )

    jacobi_weight = -(a * d + b * b) / tr * q + d * np.einsum("j,k->jk", d0, d0)
    # [.]*Ju[i] with weight indexed [j,k], antisymmetrized in (i,j)
    jac_term = np.einsum("jk,im->ijkm", jacobi_weight, ju) - np.einsum(
        "ik,jm->ijkm", jacobi_weight, ju
    )
    id_weight = -2.0 * b * b / tr * q + d * np.einsum("j,k->jk", d0, d0)
    id_term = np.einsum("jk,im->ijkm", id_weight, eye) - np.einsum("ik,jm->ijkm", id_weight, eye)

    c3 = a * d * (b * b - alpha) / alpha + 2.0 * b * b * d * (phi + 2.0 * b * b) / (phi * tr) + 4.0 * b * b * alpha / phi
    s6 = (
        a * a * (p_form.transpose(2, 0, 1) - p_form.transpose(0, 2, 1) - 2.0 * p_form.transpose(0, 1, 2))
        + a * a * b * b / alpha
        * (
            q2.transpose(2, 0, 1)  # Q2[j,k,i]
            + q2.transpose(2, 1, 0)  # Q2[k,j,i]
            - q2.transpose(0, 2, 1)  # Q2[i,k,j]
            - q2.transpose(1, 2, 0)  # Q2[k,i,j]
        )
        - c3 * (np.einsum("i,jk->ijk", d0, q) - np.einsum("j,ik->ijk", d0, q))
        - 3.0 * a * ac * rv[:, :, :, 0]
        + ac * d * (np.einsum("i,jk->ijk", d0, eye) - np.einsum("j,ik->ijk", d0, eye))
    )

    horiz = (
        rv
        + a * a / (4.0 * alpha) * rru_comb
        + a * a * b * b / (4.0 * alpha * alpha) * rr2_comb4
        + a * d * (alpha - b * b) / (4.0 * alpha * alpha) * proj_comb
        + a * b * b / (2.0 * alpha * alpha) * jac_term
        + d / (4.0 * alpha) * id_term
        + d / (4.0 * alpha * tr) * np.einsum("ijk,m->ijkm", s6, d0)
    )

    b1_comb = -b1 - b1.transpose(0, 2, 1, 3) + b1.transpose(1, 0, 2, 3) + b1.transpose(2, 0, 1, 3)
    # -B1[i,j,k] - B1[i,k,j] + B1[j,i,k] + B1[j,k,i]
    jac_weight_t = (a * d + b * b) / tr * q - d * np.einsum("j,k->jk", d0, d0)
    jac_term_t = np.einsum("jk,im->ijkm", jac_weight_t, ju) - np.einsum(
        "ik,jm->ijkm", jac_weight_t, ju
    )
    id_term_t = np.einsum("jk,im->ijkm", q, eye) - np.einsum("ik,jm->ijkm", q, eye)

    tang = (
        -a * b / (4.0 * alpha) * (rru_comb + b1_comb)
        - a * b**3 / (4.0 * alpha * alpha) * rr2_comb4
        - b * d * (3.0 * alpha - b * b) / (4.0 * alpha * alpha) * proj_comb
        + b * (b * b - alpha) / (2.0 * alpha * alpha) * jac_term_t
        + ac * b * d / (2.0 * alpha * tr) * id_term_t
    )
    return horiz, tang


def block_ii(rv: np.ndarray, a: float, b: float, c: float, d: float, alpha: float, phi: float):
    """R(X^h, Y^t)Z^h for all frame triples (tangential slot j orthogonal to u)."""
    n1 = rv.shape[0]
    tr = a + c + d
    ac = a + c
    eye = np.eye(n1)
    d0 = eye[0]
    ju, q, _, rr2, b1, _, q2 = _intermediates(rv)

    rv_sym = rv + rv.transpose(2, 1, 0, 3)  # Rv[i,j,k] + Rv[k,j,i]
    rr2_comb3 = rr2 - rr2.transpose(1, 0, 2, 3) - rr2.transpose(2, 0, 1, 3)
    # RR2[i,j,k] - RR2[j,i,k] - RR2[j,k,i]
    proj_comb2 = np.einsum("i,jkm->ijkm", d0, rv[:, 0, :, :]) - np.einsum(
        "k,ijm->ijkm", d0, rv[:, :, 0, :]
    )  # d0[i]*Rv[j,0,k,m] - d0[k]*Rv[i,j,0,m]

    w_jac_i = a * (a * d + b * b) * q + alpha * d * eye  # [j,k]
    w_jac_j = (a * d + b * b) / tr * q - d * np.einsum("i,k->ik", d0, d0)  # [i,k]
    w_id_i = a * q + (2.0 * ac + d) * eye  # [j,k]
    w_id_j = -(a * d + b * b) / (2.0 * tr) * q + d * np.einsum("i,k->ik", d0, d0)  # [i,k]

    s9 = (
        a**3 * b / alpha * (q2.transpose(2, 0, 1) - q2.transpose(0, 2, 1) - q2.transpose(1, 2, 0))
        + a * b * (-(alpha + phi) / alpha + d / tr) * np.einsum("i,jk->ijk", d0, q)
        - 2.0 * a * b * (2.0 * rv[:, :, :, 0] + rv[:, :, :, 0].transpose(2, 1, 0))
        + b * d
        * (
            (3.0 - d / tr) * np.einsum("i,jk->ijk", d0, eye)
            + 2.0 * np.einsum("k,ij->ijk", d0, eye)
        )
    )

    horiz = (
        a * b / (2.0 * alpha) * rv_sym
        + a**3 * b / (4.0 * alpha * alpha) * rr2_comb3
        + a * a * b * d / (4.0 * alpha * alpha) * proj_comb2
        - a * b / (4.0 * alpha * alpha * tr) * np.einsum("jk,im->ijkm", w_jac_i, ju)
        + a * a * b / (2.0 * alpha * alpha) * np.einsum("ik,jm->ijkm", w_jac_j, ju)
        - b * d / (4.0 * alpha * tr) * np.einsum("jk,im->ijkm", w_id_i, eye)
        + b / alpha * np.einsum("ik,jm->ijkm", w_id_j, eye)
        - b * d / (2.0 * alpha) * np.einsum("ij,km->ijkm", eye, eye)
        + d / (4.0 * alpha * tr) * np.einsum("ijk,m->ijkm", s9, d0)
    )

    tang = (
        a * a / (4.0 * alpha) * b1
        - a * a * b * b / (4.0 * alpha * alpha) * rr2_comb3
        - b * b / alpha * rv
        + a * ac / (2.0 * alpha) * rv.transpose(0, 2, 1, 3)
        + a * d * (alpha - b * b) / (4.0 * alpha * alpha) * proj_comb2
        - (alpha - b * b) / (4.0 * alpha * alpha * tr) * np.einsum("jk,im->ijkm", w_jac_i, ju)
        - a * b * b / (2.0 * alpha * alpha) * np.einsum("ik,jm->ijkm", w_jac_j, ju)
        + ac * d / (4.0 * alpha * tr) * np.einsum("jk,im->ijkm", w_id_i, eye)
        + 1.0
        / (4.0 * alpha)
        * np.einsum(
            "ik,jm->ijkm",
            2.0 * b * b * (2.0 - d / tr) * q - d * (4.0 * ac + d) * np.einsum("i,k->ik", d0, d0),
            eye,
        )
        + ac * d / (2.0 * alpha) * np.einsum("ij,km->ijkm", eye, eye)
    )
    return horiz, tang


def block_iii(rv: np.ndarray, a: float, b: float, c: float, d: float, alpha: float, phi: float):
    """R(X^t, Y^t)Z^t for all frame triples (all slots orthogonal to u)."""
    n1 = rv.shape[0]
    tr = a + c + d
    ac = a + c
    eye = np.eye(n1)
    ju = rv[:, 0, 0, :]
    coef = 1.0 / (2.0 * alpha * tr)

    jac_pair = np.einsum("jk,im->ijkm", eye, ju) - np.einsum("ik,jm->ijkm", eye, ju)
    id_pair = np.einsum("jk,im->ijkm", eye, eye) - np.einsum("ik,jm->ijkm", eye, eye)

    horiz = coef * (a * a * b * jac_pair - b * (alpha + phi) * id_pair)
    tang = coef * (-a * b * b * jac_pair + (ac * (alpha + phi) + alpha * d) * id_pair)
    return horiz, tang
