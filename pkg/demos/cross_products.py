"""Cross products on R^7: the two built-in frames and their sanity checks.

Run with:  python demos/cross_products.py
"""

from g2kit import (
    Vec7,
    build_cayley_frame,
    build_standard_frame,
    check_epsilon_identities,
    cross,
    star_phi_pairing_check,
    validate_cross_axioms,
)

for frame in (build_standard_frame(), build_cayley_frame()):
    print(f"== {frame.name} frame (labels start at {frame.label_offset}, "
          f"orientation {frame.orientation:+d})")

    print("defining triples of phi:")
    for i, j, k, s in frame.table.display_triples():
        sign = "+" if s > 0 else "-"
        print(f"   {sign}e^{i}{j}{k}")

    e = Vec7.basis
    print("e_0 x e_1 =", tuple(str(c) for c in cross(e(0), e(1), frame)))

    u = Vec7.of(1, 2, 0, -1, 3, 0, 2)
    v = Vec7.of(0, 1, -2, 1, 0, 4, -1)
    w = cross(u, v, frame)
    print("for a rational pair: <u x v, u> =", w.dot(u), " <u x v, v> =", w.dot(v))
    print("|u x v|^2 - (|u|^2 |v|^2 - <u,v>^2) =",
          w.norm_sq() - (u.norm_sq() * v.norm_sq() - u.dot(v) ** 2))

    print("eps identities:", "pass" if check_epsilon_identities(frame).passed else "FAIL")
    print("product rules: ", "pass" if validate_cross_axioms(frame, trials=50).passed else "FAIL")
    rep = star_phi_pairing_check(frame)
    print("star_phi vs cross pairing on all 840 quadruples:", rep.notes[0])
    print()
