"""Addition theorems: separating the two-point kernel.

A function of the composite separation (cosh rho or cos Theta) expands
into products of single-point Legendre/Ferrers functions weighted by
Gegenbauer polynomials of the separation angle -- the engine behind
all multipole expansions of the Green's functions.  Every series is
compared against its directly evaluated left-hand side.

Run:  python demos/03_addition_theorems.py
"""

import math

from curvgreen import (TwoPointConfig, addition_ferrers, addition_legendre,
                       addition_special, convergence_domain)

print("=" * 72)
print("1. Hyperboloid kernel: Q-type addition theorem")
print("=" * 72)
cfg = TwoPointConfig(0.5, 1.2, 0.8)
print(f"two points: r = {cfg.r1}, r' = {cfg.r2}, gamma = {cfg.gamma}")
print(f"composite rho = {cfg.rho_hyperbolic():.6f}")
for n_max in (5, 10, 20, 40):
    rep = addition_legendre("Q", 1.0, 1.0, cfg, n_max)
    print(f"n_max = {n_max:3d}: series = {rep.value.real:+.12f}   "
          f"rel err = {rep.rel_err:.2e}")
print(f"predicted geometric ratio tanh(r</2)/tanh(r>/2) = "
      f"{rep.est_ratio:.4f}")

print()
print("=" * 72)
print("2. Hypersphere kernels: the six Ferrers kinds")
print("=" * 72)
cfg = TwoPointConfig(0.5, 0.9, 1.0)
ok, ratio = convergence_domain(cfg.lt, cfg.gt, True)
print(f"convergence predicate: tan(th</2) tan(th>/2) < 1 -> {ok}, "
      f"tail ratio {ratio:.4f}")
for kind in ("PmPp", "PmQp", "PmPm", "PmQm", "PmPmmx", "QmPmmx"):
    rep = addition_ferrers(kind, 2.3, 1.1, cfg, 60)
    print(f"{kind:8s}: {rep.terms:3d} terms, rel err {rep.rel_err:.2e}")

print()
print("=" * 72)
print("3. Outside the domain the series is refused, not mis-summed")
print("=" * 72)
try:
    addition_ferrers("PmPp", 1.0, 0.5,
                     TwoPointConfig(math.pi / 2, math.pi / 2, 0.4))
except Exception as e:
    print(f"raised {type(e).__name__}: {e}")

print()
print("=" * 72)
print("4. Special cases with elementary left-hand sides")
print("=" * 72)
cfg = TwoPointConfig(0.4, 0.7, 0.9)
rep = addition_special("LOGCOT", {}, cfg, 60)
print(f"log cot(Theta/2):        series {rep.value.real:+.10f}   "
      f"rel {rep.rel_err:.1e}")
rep = addition_special("Q_K_MK", {"k": 1}, cfg, 60)
print(f"FQ_1^-1 kernel (k = 1):  series {rep.value.real:+.10f}   "
      f"rel {rep.rel_err:.1e}")
rep = addition_special("Q_MH_MMH", {"m": 0}, cfg, 60)
print(f"FQ_1/2^-1/2 (m = 0):     series {rep.value.real:+.10f}   "
      f"rel {rep.rel_err:.1e}")
hcfg = TwoPointConfig(0.5, 1.2, 0.8)
rep = addition_special("COSH_SINH_LEGENDRE", {"nu": 1.7, "form": "exp"},
                       hcfg, 40)
print(f"exp(-(nu+1/2) rho)/sinh: series {rep.value:+.10f}   "
      f"rel {rep.rel_err:.1e}")

print()
print("=" * 72)
print("5. Measured tail decay vs the predicted ratio")
print("=" * 72)
cfg = TwoPointConfig(1.1, 1.4, 0.7)
rep = addition_ferrers("PmPm", 2.3, 1.1, cfg, 60)
print(f"predicted ratio {rep.est_ratio:.4f}; last-term magnitude "
      f"{rep.last_term_mag:.2e} after {rep.terms} terms")
print(f"(ratio^terms = {rep.est_ratio ** rep.terms:.2e} -- geometric decay)")
