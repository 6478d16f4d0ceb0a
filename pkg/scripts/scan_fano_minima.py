"""Locate the Fano-factor minima for contacts of one to four atoms.

Each atom contributes a channel that saturates, so the noise dips just
below every whole multiple of the saturation conductance. This scans the
closed-form curve on a dense linear grid and prints the interior minima.
"""

import argparse

import fanolight as fl


def interior_minima(curve):
    g = [point[0] for point in curve]
    f = [point[1] for point in curve]
    return [
        (g[i], f[i])
        for i in range(1, len(f) - 1)
        if f[i] < f[i - 1] and f[i] <= f[i + 1]
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=4000, help="grid size")
    parser.add_argument("--g-min", type=float, default=0.4,
                        help="grid start, units of G0")
    args = parser.parse_args()

    for n in range(1, 5):
        model = fl.atoms(n)
        curve = fl.fano_curve(
            model, args.g_min, model.capacity, args.points, spacing="linear"
        )
        minima = interior_minima(curve)
        where = ", ".join(f"g = {gm:.3f} (F = {fm:.4f})" for gm, fm in minima)
        print(f"{n} atom(s), capacity {model.capacity:.2f} G0: {where or 'none'}")


if __name__ == "__main__":
    main()
