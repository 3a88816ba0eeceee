"""Compare the compiled word kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--words N] [--length L]
"""
import argparse
import random
import timeit

from pcfalg import _pykernels

try:
    from pcfalg import _kernels
except ImportError:
    _kernels = None


def make_words(n, length, seed=1):
    rng = random.Random(seed)
    return [[rng.choice((0, 0, rng.randint(-3, 3))) for _ in range(length)] for _ in range(n)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--length", type=int, default=24)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    words = make_words(args.words, args.length)
    small = [w[:8] for w in words]
    cases = [
        ("reduce_word", words),
        ("fold_word", small),
        ("prefix_columns", small),
        ("rotation_mats", small),
    ]
    print(f"{'kernel':16} {'python ms':>10} {'cython ms':>10} {'speedup':>8} {'declined':>9}")
    for name, data in cases:
        slow = getattr(_pykernels, name)
        t_py = min(timeit.repeat(lambda: [slow(w) for w in data], number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:16} {t_py * 1e3:10.2f} {'n/a':>10} {'n/a':>8}")
            continue
        fast = getattr(_kernels, name)
        declined = 0
        for w in data:
            got = fast(w)
            declined += got is None
            assert got is None or list(got) == list(slow(w)), name
        t_cy = min(timeit.repeat(lambda: [fast(w) for w in data], number=1, repeat=args.repeat))
        print(f"{name:16} {t_py * 1e3:10.2f} {t_cy * 1e3:10.2f} {t_py / t_cy:8.1f}x {declined:9d}")


if __name__ == "__main__":
    main()
