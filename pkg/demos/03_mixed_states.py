#!/usr/bin/env python3
"""Coherence dial: how the violation scales with the mixing parameter gamma.

Preparation mixes the +alpha and -alpha wave-plate settings with weights
(1 +- gamma)/2, which leaves the populations fixed and scales only the
off-diagonal element.  The violation is linear in the coherence envelope
s = 2 sqrt(p(1-p)) gamma for the cross term and quadratic for the direct
term, so cuts at different analysis angles probe both behaviours.
"""

import numpy as np

from measurement_coherence import PrepConfig, analytic_delta_v, prepare_signal

ALPHA_DEG = 12.0
p_fixed = PrepConfig(alpha_deg=ALPHA_DEG).p
print(f"wave plate at {ALPHA_DEG} deg -> population p = {p_fixed:.4f}\n")

gammas = np.linspace(0.0, 1.0, 11)
for theta_deg in (36.0, 84.0):
    theta = np.radians(theta_deg)
    print(f"analysis angle theta = {theta_deg:.0f} deg")
    print("  gamma   delta_v")
    for gamma in gammas:
        state = prepare_signal(PrepConfig(alpha_deg=ALPHA_DEG, w_plus=(1 + gamma) / 2))
        # sanity: preparation reproduces the analytic family
        assert abs(state.matrix[0, 1].real - np.sqrt(p_fixed * (1 - p_fixed)) * gamma) < 1e-12
        print(f"  {gamma:5.2f}   {analytic_delta_v(p_fixed, gamma, theta):+.4f}")
    print()

print("gamma = 0 is the incoherent mixture: no violation at any angle.")
print("The purest preparation (gamma = 1) maximizes |delta_v| at every")
print("angle; the 36-deg cut sits on the negative branch, 84-deg on the")
print("positive one, with the crossover where the two terms cancel.")
