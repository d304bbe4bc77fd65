"""Star product and brackets on polynomial phase space.

The l-th bidifferential operator contracts l-th derivatives of its two
arguments against l copies of the standard symplectic pairing on
(p_1..p_n, q_1..q_n): bidiff(0) is the pointwise product and bidiff(1)
the Poisson bracket.  The star product specializes the deformation
parameter to t = -i/2,

    star(u, v) = sum_l t^l / l! * bidiff(l, u, v),

a finite sum on polynomials since bidiff(l, u, v) = 0 once l exceeds
min(deg u, deg v).  The normalized bracket i*(u*v - v*u) collapses to
the odd part of the same sum and agrees with the Poisson bracket on
polynomials of degree <= 1 in the q variables.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .poly import Polynomial, compositions, midx_factorial, phase_space
from .scalars import GaussianRational, ONE

T_PARAMETER = GaussianRational(0, Fraction(-1, 2))


def phase_arity(space) -> int:
    """Number n of (p, q) pairs; rejects spaces that are not phase spaces."""
    n = space.arity // 2
    if n < 1 or space != phase_space(n):
        raise ValueError(f"{space} is not a phase space (p1..pn,q1..qn)")
    return n


def _same_phase_space(u: Polynomial, v: Polynomial) -> int:
    if u.space != v.space:
        raise ValueError(f"variable space mismatch: {u.space} vs {v.space}")
    return phase_arity(u.space)


def bidiff(l: int, u: Polynomial, v: Polynomial) -> Polynomial:
    """l-th symplectic bidifferential operator applied to (u, v).

    Summing over how many of the l pairings hit each coordinate gives

        sum_{|a|+|b|=l} l!/(a! b!) (-1)^|b| (d_p^a d_q^b u)(d_q^a d_p^b v)

    with multi-indices a, b of length n.
    """
    if l < 0:
        raise ValueError("negative bidifferential order")
    n = _same_phase_space(u, v)
    if l == 0:
        return u * v
    total = Polynomial.zero(u.space)
    lfact = factorial(l)
    for split in compositions(l, 2 * n):
        a, b = split[:n], split[n:]
        du = u.derivative(a + b)
        if du.is_zero:
            continue
        dv = v.derivative(b + a)
        if dv.is_zero:
            continue
        weight = lfact // (midx_factorial(a) * midx_factorial(b))
        if sum(b) % 2:
            weight = -weight
        total = total + (du * dv).scale(weight)
    return total


def star(u: Polynomial, v: Polynomial) -> Polynomial:
    """Associative star product at t = -i/2."""
    _same_phase_space(u, v)
    lmax = min(u.degree(), v.degree())
    acc = Polynomial.zero(u.space)
    tpow = ONE
    for l in range(max(lmax, 0) + 1):
        term = bidiff(l, u, v)
        if not term.is_zero:
            acc = acc + term.scale(tpow / factorial(l))
        tpow = tpow * T_PARAMETER
    return acc


def moyal_bracket(u: Polynomial, v: Polynomial) -> Polynomial:
    """Normalized bracket i*(star(u,v) - star(v,u)); the odd bidiff sum."""
    _same_phase_space(u, v)
    lmax = min(u.degree(), v.degree())
    acc = Polynomial.zero(u.space)
    for l in range(1, max(lmax, 0) + 1, 2):
        term = bidiff(l, u, v)
        if not term.is_zero:
            acc = acc + term.scale(T_PARAMETER ** (l - 1) / factorial(l))
    return acc


def poisson(u: Polynomial, v: Polynomial) -> Polynomial:
    """Poisson bracket sum_k (du/dp_k dv/dq_k - du/dq_k dv/dp_k)."""
    return bidiff(1, u, v)
