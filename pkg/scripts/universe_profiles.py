#!/usr/bin/env python3
"""Print the cosmological information budget under both constants profiles,
plus the per-kilogram rates, side by side."""

from oitkit.physics import CODATA, PAPER, bits_per_kg, qubits_per_kg_second, universe_info


def main() -> int:
    for consts in (PAPER, CODATA):
        report = universe_info(consts)
        rate = qubits_per_kg_second(consts)
        print(f"profile: {consts.name}")
        for key in ("rho_c", "volume", "mass", "qubits"):
            entry = report[key]
            print(f"  {key:>7}: {entry['value']:.4e} {entry['unit']}")
        print(f"  4C^2/h : {rate['qubits_per_kg_s']:.4e} qubit/(kg*s)")
        print(f"  bits/kg at 300 K: {bits_per_kg(300.0, consts):.4e}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
