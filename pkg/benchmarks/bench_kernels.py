"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 20]

Shapes match one desk-scale training step (batch 2, 64 support and
64 query tokens, window 8, width 128).
"""

import argparse
import timeit

import numpy as np

from trajdepth import kernels


def cases(rng):
    rows, dim = 2 * 128 * 8, 128
    f32 = np.float32
    x = rng.normal(size=(rows, dim)).astype(f32)
    gamma, beta = np.ones(dim, f32), np.zeros(dim, f32)
    dy = rng.normal(size=(rows, dim)).astype(f32)
    scores = rng.normal(size=(2 * 8 * 4 * 64, 65)).astype(f32)
    mask = (rng.random(scores.shape) < 0.9).astype(np.uint8)
    hidden = rng.normal(size=rows * 2 * dim).astype(f32)  # gelu works on flat buffers
    m, k = 600 * 24, 16
    center = rng.uniform(0, 256, (m, 2))
    nbr = rng.uniform(0, 256, (m, k, 2))
    valid = (rng.random((m, k)) < 0.9).astype(np.uint8)
    bw = rng.uniform(5, 20, m)
    image = rng.uniform(1, 10, (256, 256))
    pts = rng.uniform(0, 256, (4096, 2))

    def ln():
        y, xhat, rstd = kernels.layer_norm_fwd(x, gamma, beta, 1e-5)
        kernels.layer_norm_bwd(dy, xhat, rstd, gamma)

    def gelu():
        y, th = kernels.gelu_fwd(hidden)
        kernels.gelu_bwd(hidden, th, hidden)

    def softmax():
        p = kernels.softmax_fwd(scores, mask)
        kernels.softmax_bwd(p, scores)

    return {
        "layer_norm fwd+bwd": ln,
        "gelu fwd+bwd": gelu,
        "masked softmax fwd+bwd": softmax,
        "kde_sums": lambda: kernels.kde_sums(center, nbr, valid, bw),
        "bilinear_sample": lambda: kernels.bilinear_sample(image, pts),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    backends = kernels.available_backends()
    timings = {}
    for name in backends:
        kernels.use_backend(name)
        for label, fn in cases(np.random.default_rng(0)).items():
            fn()  # warm up
            timings[(label, name)] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    width = max(len(label) for label, _ in timings)
    print(f"{'kernel':<{width}}  " + "  ".join(f"{b:>10}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for label in dict.fromkeys(lbl for lbl, _ in timings):
        row = [timings[(label, b)] for b in backends]
        line = f"{label:<{width}}  " + "  ".join(f"{t * 1e3:>8.2f}ms" for t in row)
        if len(row) > 1:
            line += f"  {row[0] / row[1]:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
