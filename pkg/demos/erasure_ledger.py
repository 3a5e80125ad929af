"""Erasure-energy accounting for running a voting circuit to completion:
resetting the tally costs k T log per erased register, the cost without a
memory grows by a factor D - 1, and the per-voter term diverges with the
electorate, which rules out finite-energy dictator identification in the
infinite limit."""

from math import log

from arrowq import (
    BOLTZMANN_J_PER_K,
    EnergyParams,
    divergence_scan,
    erase_cost,
    voting_energy,
)

room = EnergyParams(k=BOLTZMANN_J_PER_K, T=300.0)
bit = erase_cost(room, 2, "with-memory")
print(f"erasing one bit at 300 K: {bit.energy:.3e} J (k T log 2)")
print()

unit = EnergyParams(k=1.0, T=1.0)
print("voting energy in units of k T, 3 voters and 3 alternatives:")
for strategy in ("with-memory", "without-memory"):
    report = voting_energy(unit, 3, 3, strategy)
    print(f"  {strategy:>15}: E1 = {report.E1:.6f}, E2 = {report.E2:.6f}, "
          f"E = {report.E:.6f}")
print(f"  (log 3 + log 6 = {log(3) + log(6):.6f})")
print()

print("cost ratio without/with memory equals D - 1:")
for D in (2, 3, 6):
    with_mem = erase_cost(unit, D, "with-memory").energy
    without = erase_cost(unit, D, "without-memory").energy
    print(f"  D = {D}: ratio {without / with_mem:.1f}")
print()

scan = divergence_scan(unit, 12, "with-memory")
print("per-voter erasure term E1(m) for growing electorates:")
print("  " + ", ".join(f"{e:.3f}" for e in scan.energies))
print(f"strictly increasing: {scan.strictly_increasing}")
print(scan.annotation)
