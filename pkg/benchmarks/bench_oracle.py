"""Compare the compiled orbit kernel against the pure-Python fallback.

Times rot_pair on a single long XY-word and max_rot_type over whole content
classes.  Run as: python3 benchmarks/bench_oracle.py [--repeat N]
"""
import argparse
import random
import time

from zigfringe import _xykernel_py
from zigfringe.xy import _sym_bytes, _word_codes

try:
    from zigfringe import _xykernel
except ImportError:
    _xykernel = None


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), result


def fmt(seconds):
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds:8.3f} s "


def report(name, label, args, repeat):
    pure_t, pure_v = best_of(getattr(_xykernel_py, name), args, repeat)
    line = f"{label:28s} pure {fmt(pure_t)}"
    if _xykernel is not None:
        comp_t, comp_v = best_of(getattr(_xykernel, name), args, repeat)
        assert comp_v == pure_v, (label, comp_v, pure_v)
        line += f"   compiled {fmt(comp_t)}   x{pure_t / comp_t:6.1f}"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, metavar="N")
    args = parser.parse_args()

    if _xykernel is None:
        print("compiled kernel unavailable; timing the pure kernel only")

    rng = random.Random(7)
    sym = "".join(rng.choice("XY") for _ in range(500))
    sym = "X" + sym[1:-1] + "Y"  # both symbols guaranteed
    wcodes = _word_codes("abaab")
    report(
        "rot_pair",
        "rot_pair (L=500)",
        (_sym_bytes(sym), wcodes, 3, 5),
        args.repeat,
    )

    for q1, q2 in ((4, 8), (6, 12), (5, 20), (6, 24)):
        report(
            "max_rot_type",
            f"max_rot_type ({q1},{q2})",
            (q1, q2, wcodes, 1, 1),
            args.repeat,
        )


if __name__ == "__main__":
    main()
