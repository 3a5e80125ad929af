"""Lift a dictatorial rule to a reversible ballot circuit and watch it
copy classical ballots perfectly while failing on superpositions, tracing
the (cos^3 t + sin^3 t)^2 fidelity curve down to its 0.5 floor."""

from math import cos, pi, sin

import numpy as np

from arrowq import (
    BallotSpace,
    PureState,
    ballot_state,
    cloning_fidelity,
    enumerate_orders,
    is_dictatorial_circuit,
    lift_rule_to_unitary,
    no_cloning_scan,
    projection_rule,
)

space = BallotSpace(3)
rule = projection_rule(2, 3, 0)
circuit = lift_rule_to_unitary(space, rule)
print(f"ballot space: {space.ballots} ballots, register size {space.d}")
print(f"circuit copies voter 0 on basis inputs: {is_dictatorial_circuit(circuit, 0)}")
print()

print("classical ballots clone exactly:")
for ballot in enumerate_orders(3):
    f = cloning_fidelity(circuit, 0, ballot_state(space, ballot))
    print(f"  ballot {ballot}: fidelity {f:.1f}")
print()

print("superpositions of two ballots do not:")
print("  theta      simulated   (cos^3 + sin^3)^2")
for frac in range(9):
    theta = frac * pi / 16
    amps = np.zeros(space.d, dtype=complex)
    amps[0], amps[1] = cos(theta), sin(theta)
    f = cloning_fidelity(circuit, 0, PureState(amps, space.d))
    predicted = (cos(theta) ** 3 + sin(theta) ** 3) ** 2
    print(f"  {theta:7.4f}   {f:.9f}  {predicted:.9f}")
print()

report = no_cloning_scan(space, trials=1000, seed=0)
print(f"scan over {report.trials} random two-ballot superpositions:")
print(f"  minimum fidelity {report.min_fidelity:.6f} at theta {report.min_theta:.4f}")
print(f"  every non-basis sample fell short of 1: {report.nonbasis_strictly_below}")
