"""Gauss codes, smoothings and the cube of resolutions.

Classical diagrams only see merges and splits; genuinely virtual diagrams
grow one-circle-to-one-circle saddles whose cobordism is nonorientable.
The two-crossing unknot below shows the interplay: one square face composes
a split with a merge, the other composes two crosscap saddles, and the two
routes must agree up to sign.
"""

from vlinkhom.diagram import all_smoothings, cube_edges, parse_gauss

for text, label in [("O1+,U2+,O3+,U1+,O2+,U3+", "classical trefoil"),
                    ("O1+,O2+,U1+,U2+", "virtual trefoil"),
                    ("O1+,O2-,U1+,U2-", "2-crossing unknot (self-R2)")]:
    d = parse_gauss(text, name=label)
    print(f"{label}:  {text}")
    print(f"  crossings: {d.n} ({d.n_plus} positive, {d.n_minus} negative)")
    sms = all_smoothings(d)
    ks = {s: sm.k for s, sm in sorted(sms.items())}
    print(f"  circles per state: {ks}")
    for e in cube_edges(d, sms):
        twists = ""
        if e.kind != "single_cycle":
            twists = f"  twists in={e.twist_in} out={e.twist_out}"
        print(f"    {e.from_state} -> {e.to_state}  {e.kind:12}"
              f" sign=(-1)^{e.sign_exponent}{twists}")
    print()

print("Circles carry canonical orientations anchored at their minimal")
print("half-edge; a twist bit records a saddle whose coherent band")
print("orientation disagrees with that anchor, and the flip involution phi")
print("is inserted on exactly those tensor factors.")
