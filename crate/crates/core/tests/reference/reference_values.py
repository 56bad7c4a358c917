"""Extended-precision reference values frozen into tests/reference.rs.

Run with `python3 reference_values.py`; requires mpmath. Everything here is
evaluated at 50 significant digits straight from the defining formulas, with
no algebraic rearrangement, so cancellation in the double-precision code
paths shows up as a mismatch.
"""
import mpmath as mp

mp.mp.dps = 50

HBAR = mp.mpf("1.054571817e-34")
MU_B = mp.mpf("9.2740100783e-24")

m = mp.mpf("1.8e-25")
grad = mp.mpf("1e3")
sigma = mp.mpf("1e-5")
f = MU_B * grad


def sigma_t(t):
    return mp.sqrt(sigma**2 + (HBAR * t / (2 * m * sigma)) ** 2)


def kin(t):
    dp = f * t
    dz = f * t**2 / (2 * m)
    dzb = t * dp / m - dz
    return dp, dz, dzb, sigma_t(t)


def coherence(t):
    dp, _, dzb, st = kin(t)
    a = mp.mpf(1) / 2 * dp / (HBAR / (2 * sigma)) * (sigma / st + st / sigma)
    return mp.exp(-a**2 / 2 - (dzb / st) ** 2 / 2)


chi = 8 * f**2 * m**2 * sigma**6 / HBAR**4
tau = mp.sqrt(2 * mp.sqrt(2) * m * sigma / f) * mp.sqrt(
    -2 * mp.sqrt(2) * f * m * sigma**3 / HBAR**2 + mp.sqrt(1 + chi)
)
tau1 = HBAR / (mp.sqrt(2) * f * sigma)
tau2 = mp.sqrt(2 * mp.sqrt(2) * m * sigma / f)


def show(name, v):
    print(f"{name:<28} {mp.nstr(v, 17)}")


show("force", f)
for label, t in [("2ns", mp.mpf("2e-9")), ("10us", mp.mpf("1e-5"))]:
    dp, dz, dzb, st = kin(t)
    show(f"delta_p@{label}", dp)
    show(f"delta_z@{label}", dz)
    show(f"delta_z_bar@{label}", dzb)
    show(f"sigma_t@{label}", st)
    show(f"coherence@{label}", coherence(t))
    show(f"sep_position@{label}", dzb / st)
show("chi", chi)
show("tau", tau)
show("tau1", tau1)
show("tau2", tau2)
show("coherence@tau", coherence(tau))
_, _, dzb, st = kin(tau)
show("sep_position@tau", dzb / st)
show("sep_momentum@tau", f * tau / (HBAR / (2 * sigma)))
