"""Mechanical verification of the vertex-operator commutation relations.

The commutator of two modes is compared, state by state, against the mode
coefficients of the closed-form right-hand sides: a central scalar plus a
Heisenberg current in the diagonal case, a single shifted vertex operator
when the roots pair to +-1, and zero when they are orthogonal.  All checks
are exact; a window (m, k) in [-M, M]^2 bounds the enumeration only.
"""

from dataclasses import dataclass, field

from .scalar import Scalar, ZERO, R2
from . import dist
from .fock import StateVector, a_mode, gamma_mode, l0
from .lattice import add_vec, neg_vec


def classify_pair(lat, alpha, beta):
    """Case tag of Thm-style commutator analysis for a root pair."""
    if beta == alpha:
        return "diag"
    if beta == neg_vec(alpha):
        return "minus-diag"
    ip = lat.inner(alpha, beta)
    if ip == 1:
        return "plus1"
    if ip == -1:
        return "minus1"
    if ip == 0:
        return "zero"
    raise ValueError(f"unexpected root pair with (a|b)={ip}")


def commutator_lhs(lat, alpha, beta, m, k, s):
    first = gamma_mode(lat, alpha, m, gamma_mode(lat, beta, k, s))
    second = gamma_mode(lat, beta, k, gamma_mode(lat, alpha, m, s))
    return first - second


def _diff_row(kernel, m, width):
    """Nonzero (k', coeff) entries of row m of (iota_zw - iota_wz)(kernel)."""
    table = dist.iota_diff(kernel, abs(m), width)
    return table.row(m)


def _rhs_diag(lat, alpha, m, k, s, deg):
    width = abs(m) + abs(k) + deg + 4
    central = dist.iota_diff(
        dist.K_W_OVER_ZPW - dist.K_W2_OVER_ZPW2, abs(m), width).get(m, k)
    out = s * central if central else StateVector()
    for kp, coeff in _diff_row(dist.K_W2_OVER_ZPW, m, width):
        r = k - kp - 1
        if r % 2 == 0:
            continue
        out = out - a_mode(lat, alpha, r, s) * (coeff * R2)
    return out


def commutator_rhs(lat, alpha, beta, m, k, s):
    case = classify_pair(lat, alpha, beta)
    deg = s.degree_bound()
    if case == "zero":
        return StateVector()
    if case == "diag":
        return _rhs_diag(lat, alpha, m, k, s, deg)
    if case == "minus-diag":
        out = _rhs_diag(lat, alpha, m, k, s, deg)
        return out * (-1) ** (k % 2)
    width = abs(m) + abs(k) + deg + 4
    if case == "plus1":
        sign = -lat.nu(alpha, beta)
        target = add_vec(neg_vec(alpha), beta)
        rows = _diff_row(dist.K_W_OVER_ZPW, m, width)
    else:
        sign = lat.nu(alpha, beta)
        target = add_vec(alpha, beta)
        rows = _diff_row(dist.K_W_OVER_ZMW, m, width)
    out = StateVector()
    for kp, coeff in rows:
        out = out + gamma_mode(lat, target, k - kp, s) * (coeff * sign)
    return out


@dataclass
class VerificationPlan:
    lat: object
    pairs: list
    window: int = 4
    states: list = field(default_factory=list)

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if not self.states:
            self.states = default_states(self.lat)


def default_states(lat, sample_degree4=True):
    """Named test states: all pure cosets, single-oscillator states at
    levels 1 and 3, and one fixed degree-4 state."""
    n = lat.rank
    states = []
    for bits in range(1 << n):
        states.append((f"e^{bits:0{n}b}", StateVector.vacuum(bits)))
    for r in (1, 3):
        for j in range(1, n + 1):
            h = lat.simple_root(j)
            for bits in range(1 << n):
                s = a_mode(lat, h, -r, StateVector.vacuum(bits))
                states.append((f"a(-{r},h{j})e^{bits:0{n}b}", s))
    if sample_degree4:
        h1 = lat.simple_root(1)
        hn = lat.simple_root(n)
        s = a_mode(lat, h1, -1, a_mode(lat, hn, -3, StateVector.vacuum(0)))
        states.append(("a(-1,h1)a(-3,hn)e^0", s))
    return states


def reduced_states(lat, pair_bits=0):
    """A small per-pair state set for large all-pairs sweeps: two cosets,
    two single-oscillator states and a degree-4 state."""
    n = lat.rank
    h1 = lat.simple_root(1)
    h2 = lat.simple_root(min(2, n))
    return [
        ("e^0", StateVector.vacuum(0)),
        (f"e^{pair_bits:0{n}b}", StateVector.vacuum(pair_bits)),
        ("a(-1,h1)e^0", a_mode(lat, h1, -1, StateVector.vacuum(0))),
        (f"a(-3,h2)e^{pair_bits:0{n}b}",
         a_mode(lat, h2, -3, StateVector.vacuum(pair_bits))),
        ("a(-1,h1)a(-3,h2)e^0",
         a_mode(lat, h1, -1, a_mode(lat, h2, -3, StateVector.vacuum(0)))),
    ]


def verify_gamma_commutators(plan):
    """Check LHS = RHS for every pair, every (m, k) in the window, every
    test state.  Returns one report entry per (pair, state)."""
    lat = plan.lat
    M = plan.window
    entries = []
    for alpha, beta in plan.pairs:
        case = classify_pair(lat, alpha, beta)
        for state_id, s in plan.states:
            gamma_b = {k: gamma_mode(lat, beta, k, s) for k in range(-M, M + 1)}
            gamma_a = {m: gamma_mode(lat, alpha, m, s) for m in range(-M, M + 1)}
            fails = []
            for m in range(-M, M + 1):
                for k in range(-M, M + 1):
                    lhs = gamma_mode(lat, alpha, m, gamma_b[k]) \
                        - gamma_mode(lat, beta, k, gamma_a[m])
                    rhs = commutator_rhs(lat, alpha, beta, m, k, s)
                    if lhs != rhs:
                        fails.append({"m": m, "k": k,
                                      "lhs": lhs.render(), "rhs": rhs.render()})
            entries.append({
                "algebra": str(lat.kind), "case": case,
                "alpha": list(alpha), "beta": list(beta),
                "state_id": state_id, "pass": not fails, "fails": fails,
            })
    return entries


def verify_heisenberg_vertex(lat, window, states, roots=None):
    """[a_r(h), Gamma_{alpha,m}] = sqrt(2) (h|alpha) Gamma_{alpha,m+r}."""
    if roots is None:
        roots = [lat.simple_root(j) for j in range(1, lat.rank + 1)]
    entries = []
    for alpha in roots:
        for j in range(1, lat.rank + 1):
            h = lat.simple_root(j)
            ip = lat.inner(h, alpha)
            for r in (-3, -1, 1, 3):
                fails = []
                for state_id, s in states:
                    for m in range(-window, window + 1):
                        lhs = a_mode(lat, h, r, gamma_mode(lat, alpha, m, s)) \
                            - gamma_mode(lat, alpha, m, a_mode(lat, h, r, s))
                        rhs = gamma_mode(lat, alpha, m + r, s) * (R2 * ip)
                        if lhs != rhs:
                            fails.append({"state_id": state_id, "m": m})
                entries.append({
                    "algebra": str(lat.kind), "alpha": list(alpha),
                    "h": j, "r": r, "pass": not fails, "fails": fails,
                })
    return entries


def verify_l0_gamma(lat, window, states, roots=None):
    """[L_0, Gamma_{alpha,m}] = -m Gamma_{alpha,m}."""
    if roots is None:
        roots = [lat.simple_root(j) for j in range(1, lat.rank + 1)]
    entries = []
    for alpha in roots:
        fails = []
        for state_id, s in states:
            for m in range(-window, window + 1):
                g = gamma_mode(lat, alpha, m, s)
                lhs = l0(g) - gamma_mode(lat, alpha, m, l0(s))
                if lhs != g * (-m):
                    fails.append({"state_id": state_id, "m": m})
        entries.append({"algebra": str(lat.kind), "alpha": list(alpha),
                        "pass": not fails, "fails": fails})
    return entries
