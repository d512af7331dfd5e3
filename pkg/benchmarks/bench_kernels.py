"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times canonical_form and warping_profile on random codes of several sizes,
then one simplify run with each backend (in a subprocess, since the backend
is chosen at import).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from weldkit._kernels import _pykernels

try:
    from weldkit._kernels import _ckernels
except ImportError:
    _ckernels = None

from weldkit.gaussdiag import Pass, WeldedDiagram

SIMPLIFY_SNIPPET = """
import time, weldkit
from weldkit.gaussdiag import parse
from weldkit.moves import simplify
# a 10-crossing code whose reachable set is far larger than the budget
d = parse("O1+ U1+ O2- U3+ U4+ U5+ O6- O3+ U7- U6- U2- U8- O5+ U9- O10- O7- O4+ U10- O8- O9-")
t = time.perf_counter()
r = simplify(d, 50000)
print(weldkit.BACKEND, time.perf_counter() - t, r.states_explored)
"""


def random_tokens(rng, n):
    labels = [c for c in range(1, n + 1) for _ in range(2)]
    rng.shuffle(labels)
    seen, code = set(), []
    for lab in labels:
        code.append(Pass(lab, "U" if lab in seen else "O"))
        seen.add(lab)
    return WeldedDiagram(tuple(code), {c: rng.choice((1, -1)) for c in range(1, n + 1)}).tokens


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=2000)
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled kernels not built; run pip install -e . --no-build-isolation")
    rng = random.Random(7)
    print(f"{'kernel':16} {'n':>3} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    for name in ("canonical_form", "warping_profile"):
        for n in (4, 8, 16, 32):
            toks = [random_tokens(rng, n) for _ in range(50)]
            res = []
            for mod in (_pykernels, _ckernels):
                f = getattr(mod, name)
                t = timeit.timeit(
                    lambda f=f, toks=toks: [f(x) for x in toks], number=args.repeat // 50 or 1
                )
                res.append(t / ((args.repeat // 50 or 1) * len(toks)) * 1e6)
            print(f"{name:16} {n:>3} {res[0]:>10.2f} {res[1]:>10.2f} {res[0] / res[1]:>7.1f}x")
    print()
    for pure in ("1", ""):
        env = dict(os.environ, WELDKIT_PURE_PYTHON=pure)
        out = subprocess.run(
            [sys.executable, "-c", SIMPLIFY_SNIPPET],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        ).stdout.split()
        print(f"simplify, {out[2]} states, backend {out[0]:7}: {float(out[1]):.2f}s")


if __name__ == "__main__":
    main()
