"""Closed-surface evaluation under the unoriented TQFTs.

Every theory here is aspherical (sphere evaluates to 0) and sends the torus
to 2 in the ground field.  Nonorientable surfaces evaluate through powers of
the crosscap element theta, and trading three crosscaps for a handle and a
crosscap never changes the value.
"""

from vlinkhom.algebra import preset, theory_from_triple
from vlinkhom.fields import QQ
from vlinkhom.tqft import evaluate_closed_surface

Q = QQ.from_int

theories = [("f2_row1", preset("f2_row1")),
            ("f2_row7", preset("f2_row7")),
            ("f2_row8", preset("f2_row8")),
            ("qq(1,0,1)", theory_from_triple(Q(1), Q(0), Q(1))),
            ("qq(2,1,1)", theory_from_triple(Q(2), Q(1), Q(1)))]

print("Surface values eps(H^g theta^k) (g = genus, k = crosscaps):\n")
header = "  surface          " + "".join(f"{name:>12}" for name, _ in theories)
print(header)
names = {(0, 0): "sphere", (1, 0): "torus", (2, 0): "genus 2",
         (0, 1): "proj. plane", (0, 2): "Klein bottle", (0, 3): "Dyck surface",
         (1, 1): "torus + 1 cc"}
for (g, k), label in names.items():
    row = "".join(f"{th.field.to_str(evaluate_closed_surface(th, g, k)):>12}"
                  for _, th in theories)
    print(f"  {label:16} {row}")

print("\nCrosscap trading (g, k) -> (g+1, k-2) is invisible:")
for name, th in theories:
    vals = [th.field.to_str(evaluate_closed_surface(th, g, k))
            for g, k in [(0, 4), (1, 2), (2, 0)]]
    assert len(set(vals)) == 1
    print(f"  {name}: (0,4) = (1,2) = (2,0) = {vals[0]}")
