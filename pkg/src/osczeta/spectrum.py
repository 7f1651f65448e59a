"""High-precision eigenvalues of -d^2/dq^2 + |q|^N on the half line.

The Neumann condition at q=0 (parity '+') selects the even eigenfunctions of
the full-line operator, the Dirichlet condition (parity '-') the odd ones.
Eigenvalues are found by matching an outward power-series integration from
q=0 against an inward integration carrying decaying initial data, bracketing
the matching Wronskian on a semiclassical (Bohr-Sommerfeld) grid, and
polishing by bisection plus secant steps.  Each accepted eigenvalue is
certified by counting eigenfunction nodes.

For N=1 the odd/even eigenvalues are exactly the negated zeros of Ai / Ai',
and the solver takes that fast path.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math

import mpmath
from mpmath import mpf

from .errors import BracketFailureError, CertificationError
from .numerics import airy_negative_zero
from .precision import DEFAULT_DPS, GUARD, rounded, working

PARITIES = ("+", "-")


@dataclasses.dataclass(frozen=True)
class SpectrumRecord:
    """First eigenvalues of one parity sector, with precision certificates."""
    N: int
    parity: str
    eigenvalues: tuple
    certified_digits: tuple

    def __post_init__(self):
        if self.parity not in PARITIES:
            raise ValueError("parity must be '+' or '-'")
        evs = self.eigenvalues
        if any(e <= 0 for e in evs):
            raise ValueError("eigenvalues must be positive")
        if any(b <= a for a, b in zip(evs, evs[1:])):
            raise ValueError("eigenvalues must be strictly increasing")

    def __len__(self):
        return len(self.eigenvalues)

    def full_index(self, j: int) -> int:
        """Index of the j-th eigenvalue of this parity within the merged
        spectrum (even k for '+', odd k for '-')."""
        return 2 * j + (0 if self.parity == "+" else 1)

    def to_rows(self):
        return [
            {"N": self.N, "parity": self.parity, "k": j,
             "E": mpmath.nstr(e, d, strip_zeros=False),
             "certified_digits": d}
            for j, (e, d) in enumerate(zip(self.eigenvalues,
                                           self.certified_digits))
        ]

    def to_json(self) -> str:
        return json.dumps({"N": self.N, "parity": self.parity,
                           "eigenvalues": self.to_rows()}, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["N", "parity", "k", "E", "certified_digits"])
        writer.writeheader()
        writer.writerows(self.to_rows())
        return buf.getvalue()


def merged_spectrum(plus: SpectrumRecord, minus: SpectrumRecord):
    """Interleave the two parity sectors into the full-line spectrum."""
    out = []
    for pair in zip(plus.eigenvalues, minus.eigenvalues):
        out.extend(pair)
    longer = plus.eigenvalues[len(minus):] or minus.eigenvalues[len(plus):]
    if len(plus) == len(minus) + 1:
        out.append(plus.eigenvalues[-1])
    return out


# --------------------------------------------------------------------------
# Semiclassical prediction grid
# --------------------------------------------------------------------------

def _b0_float(N: int) -> float:
    """Leading counting coefficient (float grade; exact version in zetafns)."""
    return (4.0 / N) * math.gamma(1.0 / N) * math.gamma(1.5) / math.gamma(1.0 / N + 1.5)


def _predicted_energy(N: int, k_full: float) -> float:
    """Bohr-Sommerfeld inversion of (b0/2pi) E^mu = k + 1/2."""
    mu = (N + 2) / (2.0 * N)
    return (2.0 * math.pi * (k_full + 0.5) / _b0_float(N)) ** (1.0 / mu)


# --------------------------------------------------------------------------
# Power-series ODE stepping
# --------------------------------------------------------------------------

def _taylor_step(N, E, q0, y, yp, h, tol):
    """Advance psi'' = (q^N - E) psi from q0 by h via the local Taylor
    recurrence; returns (psi, psi') at q0 + h."""
    # potential coefficients of (q0 + t)^N in t
    v = [mpf(math.comb(N, j)) * q0 ** (N - j) for j in range(N + 1)]
    c = [y, yp]
    acc_y = y + yp * h
    acc_p = yp
    hp = mpf(1)  # h^{k+1} once incremented below
    k = 0
    prev_small = False
    scale = max(abs(y), abs(yp) * abs(h), mpf(1) * 10 ** -50)
    while True:
        src = -E * c[k]
        for j in range(min(k, N) + 1):
            src += v[j] * c[k - j]
        nxt = src / ((k + 1) * (k + 2))
        c.append(nxt)
        hp *= h
        term_p = (k + 2) * nxt * hp
        acc_p += term_p
        hp2 = hp * h
        term_y = nxt * hp2
        acc_y += term_y
        scale = max(scale, abs(term_y))
        k += 1
        small = (abs(term_y) < tol * scale
                 and abs(term_p) < tol * scale * max(abs(h), mpf(1)))
        # parity of the potential can zero out every other coefficient, so a
        # single tiny term is not evidence of convergence
        if k > 4 and small and prev_small:
            break
        prev_small = small
        if k > 400:
            break
    return acc_y, acc_p


def _forbidden_rate(N: int, E: float, q: float) -> float:
    return math.sqrt(max(q ** N - E, 0.0))


def _choose_qmax(N: int, E: float, qm: float, decades: float) -> float:
    """Smallest grid point where the WKB decay from qm exceeds the target
    number of decimal decades (float estimate; errors land far below the
    arithmetic noise floor)."""
    target = decades * math.log(10.0)
    q = qm
    acc = 0.0
    step = max(0.1, 0.05 * qm)
    while acc < target:
        r0 = _forbidden_rate(N, E, q)
        r1 = _forbidden_rate(N, E, q + step)
        acc += 0.5 * (r0 + r1) * step
        q += step
        if q > qm + 1e4:
            raise BracketFailureError("forbidden region too shallow")
    return q


def _shoot(N: int, E, parity: str, dps: int):
    """Integrate outward and inward, returning (normalized Wronskian at the
    matching point, outward node count)."""
    wp_extra = 15
    with working(dps, wp_extra):
        tol = mpf(10) ** (-(dps + GUARD + 10))
        Ef = float(E)
        qt = Ef ** (1.0 / N)
        qm_f = 1.2 * qt
        qmax_f = _choose_qmax(N, Ef, qm_f, dps + 10)
        qm = mpf(qm_f)
        qmax = mpf(qmax_f)

        # outward sweep: oscillatory region needs the phase advance per step
        # below ~0.5 rad so endpoint signs catch every node
        h_osc = min(0.25, 0.5 / math.sqrt(max(Ef, 1.0)))
        y, yp = (mpf(1), mpf(0)) if parity == "+" else (mpf(0), mpf(1))
        q = mpf(0)
        nodes = 0
        prev_sign = mpmath.sign(y) or mpmath.sign(yp)
        while q < qm:
            h = min(mpf(h_osc), qm - q)
            y, yp = _taylor_step(N, E, q, y, yp, h, tol)
            q += h
            s = mpmath.sign(y)
            if s and prev_sign and s != prev_sign:
                nodes += 1
            if s:
                prev_sign = s
        y_out, yp_out = y, yp

        # inward sweep with decaying WKB data
        V = qmax ** N
        kappa = mpmath.sqrt(V - E)
        y, yp = mpf(1), -kappa - N * qmax ** (N - 1) / (4 * (V - E))
        q = qmax
        while q > qm:
            rate = _forbidden_rate(N, Ef, float(q))
            h = min(0.5, 3.0 / rate if rate > 0 else 0.5)
            h = min(mpf(h), q - qm)
            y, yp = _taylor_step(N, E, q, y, yp, -h, tol)
            q -= h
            # renormalize to keep magnitudes tame
            scale = max(abs(y), abs(yp))
            y /= scale
            yp /= scale
        y_in, yp_in = y, yp

        w = yp_out * y_in - y_out * yp_in
        norm = mpmath.sqrt((y_out ** 2 + yp_out ** 2) * (y_in ** 2 + yp_in ** 2))
        return w / norm, nodes


def _refine(N: int, parity: str, a, b, wa, wb, dps: int):
    """Bisection with secant acceleration on the normalized Wronskian."""
    target = mpf(10) ** (-(dps + 4))
    with working(dps, 15):
        a, b, wa, wb = mpf(a), mpf(b), mpf(wa), mpf(wb)
        side = 0
        for _ in range(dps * 4 + 60):
            if b - a < target * b:
                break
            # Illinois-damped regula falsi: halving a repeatedly retained
            # endpoint's value restores superlinear convergence
            denom = wb - wa
            mid = (a + b) / 2
            if denom != 0:
                cand = (a * wb - b * wa) / denom
                if a < cand < b:
                    mid = cand
            wm, _ = _shoot(N, mid, parity, dps)
            if wm == 0:
                return mid
            if mpmath.sign(wm) == mpmath.sign(wa):
                a, wa = mid, wm
                if side == -1:
                    wb /= 2
                side = -1
            else:
                b, wb = mid, wm
                if side == 1:
                    wa /= 2
                side = 1
        return (a + b) / 2


def _solve_one(N: int, parity: str, j: int, dps: int, correction: float):
    """Locate the j-th eigenvalue of the parity sector."""
    kf = 2 * j + (0 if parity == "+" else 1)
    lo = _predicted_energy(N, kf - 1) * correction if kf >= 1 \
        else 0.25 * _predicted_energy(N, 0) * correction
    hi = _predicted_energy(N, kf + 1) * correction
    for attempt in range(3):
        grid = [lo + (hi - lo) * t / 6.0 for t in range(7)]
        vals = [_shoot(N, mpf(g), parity, dps)[0] for g in grid]
        bracket = None
        for (ga, va), (gb, vb) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
            if mpmath.sign(va) != mpmath.sign(vb):
                bracket = (ga, gb, va, vb)
                break
        if bracket:
            break
        lo, hi = lo / 1.5, hi * 1.5
    else:
        raise BracketFailureError(
            f"no sign change for N={N} parity={parity} index {j}")
    e = _refine(N, parity, *bracket, dps)
    _, nodes = _shoot(N, e, parity, dps)
    if nodes != j:
        raise CertificationError(
            f"node count {nodes} != index {j} for N={N} parity={parity}")
    return rounded(e, dps)


def _airy_record(parity: str, count: int, dps: int) -> SpectrumRecord:
    """N=1 closed route: eigenvalues are negated zeros of Ai (Dirichlet)
    or of Ai' (Neumann)."""
    deriv = 1 if parity == "+" else 0
    evs = tuple(airy_negative_zero(k, deriv, dps) for k in range(1, count + 1))
    return SpectrumRecord(1, parity, evs, (dps,) * count)


def eigenvalues(N: int, parity: str, count: int,
                dps: int = DEFAULT_DPS) -> SpectrumRecord:
    """First `count` eigenvalues of -d^2/dq^2 + q^N (q >= 0) with a Neumann
    ('+') or Dirichlet ('-') condition at the origin."""
    if N < 1 or count < 1:
        raise ValueError("need N >= 1 and count >= 1")
    if parity not in PARITIES:
        raise ValueError("parity must be '+' or '-'")
    if N == 1:
        return _airy_record(parity, count, dps)
    evs = []
    correction = 1.0
    for j in range(count):
        e = _solve_one(N, parity, j, dps, correction)
        evs.append(e)
        kf = 2 * j + (0 if parity == "+" else 1)
        # calibrate the semiclassical window with the latest ratio
        correction = float(e) / _predicted_energy(N, kf)
    return SpectrumRecord(N, parity, tuple(evs), (dps,) * count)


# --------------------------------------------------------------------------
# Diagnostics
# --------------------------------------------------------------------------

def counting_check(record: SpectrumRecord) -> dict:
    """Compare each eigenvalue against the semiclassical counting function
    (b0/2pi) E^mu = k + 1/2; a jump of about one unit between consecutive
    residuals flags a missed (or spurious) eigenvalue."""
    if len(record) < 5:
        raise ValueError("need at least 5 eigenvalues")
    N = record.N
    mu = (N + 2) / (2.0 * N)
    b0 = _b0_float(N)
    residuals = []
    for j, e in enumerate(record.eigenvalues):
        kf = record.full_index(j)
        residuals.append(b0 / (2 * math.pi) * float(e) ** mu - (kf + 0.5))
    jumps = [abs(b - a) for a, b in zip(residuals, residuals[1:])]
    flagged = any(j > 0.6 for j in jumps)
    return {
        "N": N,
        "parity": record.parity,
        "residuals": residuals,
        "max_abs_residual_tail": max(abs(r) for r in residuals[2:]) if len(residuals) > 2 else None,
        "missed_eigenvalue_flag": flagged,
    }
