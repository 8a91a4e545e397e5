"""Compare the compiled and pure-Python H(n,r,s) kernels.

Run from the repository root after building the extension:

    python benchmarks/bench_hkernel.py [--groups N]
"""

import argparse
import time

from gbs_sep.kernels import load
from gbs_sep.numtheory import PrimeSet, enumerate_omega

CASES = [(3, 4, 80), (2, 10, 11), (-2, 12, 13), (3, 6, 91)]


def omega_upto(n, rs_max):
    out = []
    for r, s in enumerate_omega(n, PrimeSet.all(), rs_max):
        out.extend((r * k, s) for k in range(1, rs_max // (r * s) + 1))
    return out


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rs-max", type=int, default=120, help="largest |H| in the sweep")
    args = ap.parse_args()

    backends = {}
    for name in ("cython", "python"):
        try:
            backends[name] = load(name)
        except ImportError:
            print(f"{name}: not available")
    print(f"{'case':<22}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")

    def row(label, fn_name, cases):
        times = {}
        for name, mod in backends.items():
            fn = getattr(mod, fn_name)
            total = 0.0
            for n, r, s in cases:
                dt, _ = timed(fn, n % s, r, s)
                total += dt
            times[name] = total
        line = f"{label:<22}" + "".join(f"{t:>11.3f}s" for t in times.values())
        if len(times) == 2:
            line += f"{times['python'] / times['cython']:>9.1f}x"
        print(line)

    for n, r, s in CASES:
        row(f"disagree H({n},{r},{s})", "criterion_bruteforce_disagreements", [(n, r, s)])
    sweep = [(n, r, s) for n in (-3, -2, 2, 3) for r, s in omega_upto(n, args.rs_max)]
    row(f"sweep {len(sweep)} groups", "criterion_bruteforce_disagreements", sweep)
    row("axioms H(3,4,20)", "axiom_violations", [(3, 4, 20)])


if __name__ == "__main__":
    main()
