#!/usr/bin/env python3
"""Run the full certification cascade over every bundled fixture and print
a summary table: TU verdict, method, homology, and torsion witnesses."""
from ohcp import fixtures
from ohcp.homology import homology_summary, torsion_witness_from_submatrix
from ohcp.tu import tu_verdict


def main():
    cases = [
        ("triangle (disk)", fixtures.triangle(), 1),
        ("disk fan (6 triangles)", fixtures.disk_fan(6), 1),
        ("tetrahedron surface", fixtures.tetrahedron_surface(), 1),
        ("cylinder", fixtures.cylinder(), 1),
        ("Moebius strip", fixtures.mobius_strip(), 1),
        ("projective plane", fixtures.projective_plane(), 1),
        ("torus", fixtures.torus(), 1),
        ("two tetrahedra", fixtures.two_tetrahedra(), 2),
        ("solid octahedron", fixtures.solid_octahedron(), 2),
        ("seven tetrahedra", fixtures.seven_tetrahedra(), 2),
    ]
    print(f"{'fixture':<26} {'p':>1} {'verdict':<7} {'method':<28} "
          f"{'H_p':<12} torsion witness")
    for name, K, p in cases:
        v = tu_verdict(K, p)
        betti, torsion = homology_summary(K, p)
        hp = f"Z^{betti}" + "".join(f" + Z_{t}" for t in torsion)
        witness = "-"
        if v.status == "NotTU":
            w = torsion_witness_from_submatrix(K, p, v.witness_rows,
                                               v.witness_cols)
            witness = (f"|L|={len(w.L_cols)} |L0|={len(w.L0_rows)} "
                       f"torsion {w.torsion_coefficient}")
        print(f"{name:<26} {p:>1} {v.status:<7} {v.method:<28} "
              f"{hp:<12} {witness}")


if __name__ == "__main__":
    main()
