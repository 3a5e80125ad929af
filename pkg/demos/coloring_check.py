"""Basis colorings as outcome assignments: a valid coloring marks exactly
one ray per orthonormal basis.  One-hot colorings pass, degenerate ones
fail, and a dictatorial rule induces a valid coloring of the ballot basis
at every profile."""

import numpy as np

from arrowq import (
    KSInstance,
    all_profiles,
    discover_orthonormal_bases,
    ks_instance_from_rule,
    projection_rule,
    verify_ks_coloring,
)

d = 4
eye = np.eye(d, dtype=complex)
basis = (tuple(range(d)),)
print(f"standard basis in dimension {d}:")
for coloring in ((1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0), (1, 1, 1, 1)):
    ok, violated = verify_ks_coloring(KSInstance(d, eye, basis, coloring))
    verdict = "valid" if ok else f"invalid, violating bases {list(violated)}"
    print(f"  coloring {coloring}: {verdict}")
print()

rule = projection_rule(2, 3, 0)
valid_everywhere = all(
    verify_ks_coloring(ks_instance_from_rule(rule, profile))[0]
    for profile in all_profiles(2, 3)
)
print("dictatorial rule colors the ballot basis at each of the 36 profiles:")
print(f"  all colorings valid: {valid_everywhere}")
print()

# a vector set can contain several overlapping orthonormal bases
vectors = np.array(
    [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [0, 1, 1] / np.sqrt(2),
        [0, 1, -1] / np.sqrt(2),
    ],
    dtype=complex,
)
bases = discover_orthonormal_bases(vectors)
print(f"discovered bases among {len(vectors)} vectors: {bases}")
coloring = (1, 0, 0, 0, 0)
ok, violated = verify_ks_coloring(
    KSInstance(3, vectors, tuple(bases), coloring)
)
print(f"coloring {coloring}: {'valid' if ok else 'invalid'}")
print("marking the shared vector satisfies both bases at once")
