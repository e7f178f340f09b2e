"""Scalar-recurrence oracle for the d=1 accumulator.

In dimension one every quantity has a closed scalar form: V advances by
u squared and the potential norm is sqrt(u^2 / V^p). This recomputes the
per-step CSV without touching the library, mirroring the arithmetic
operation-for-operation so the comparison is byte-exact.
"""


import math


def snapshot_csv(values, ridge, power):
    rows = ["t,i,lambda_i,eps_sq_i,norm_before,norm_after"]
    v = ridge
    for t, u in enumerate(values, start=1):
        v_before = v
        norm_before = math.sqrt(u * u / v_before**power)
        v = v + u * u
        eps_sq = max(0.0, v - v_before)
        norm_after = math.sqrt(u * u / v**power)
        rows.append(
            f"{t},1,{v:.6f},{eps_sq:.6f},{norm_before:.6f},{norm_after:.6f}"
        )
    return "\n".join(rows) + "\n"


def main():
    import argparse

    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input", help="one observation per line")
    parser.add_argument("--ridge", type=float, default=1.0)
    parser.add_argument("--power", type=float, default=1.0)
    args = parser.parse_args()

    values = []
    with open(args.input) as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if line:
                values.append(float(line.replace(",", " ").split()[0]))
    print(snapshot_csv(values, args.ridge, args.power), end="")


if __name__ == "__main__":
    main()
