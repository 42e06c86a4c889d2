"""Pure-Python/numpy versions of the compiled kernels in ``_kernels.pyx``."""
from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _mix_int(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def stream_key(seed: int, stream: int) -> int:
    return _mix_int((seed & _MASK) ^ _mix_int((stream + GOLDEN) & _MASK))


def _mix_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def uniforms(key: int, start: int, count: int) -> np.ndarray:
    counters = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(key) + counters * np.uint64(GOLDEN)
        bits = _mix_array(z) >> np.uint64(11)
    return bits.astype(np.float64) * (1.0 / 9007199254740992.0)


def nested_harmonic_partial(m: int, k: int, N: int) -> float:
    """sum_{n<N} S_k(n) / n^m in double precision (plain loops)."""
    S = [1.0] + [0.0] * k
    total = 0.0
    for n in range(1, N):
        total += S[k] / float(n) ** m
        for j in range(k, 0, -1):
            S[j] += S[j - 1] / n
    return total


def integrand_values(code: int, x: np.ndarray) -> np.ndarray:
    if code == 0:
        return np.ones(len(x))
    if code == 1:
        return (1.0 - x[:, 0]) / (x[:, 0] * x[:, 1] * (-np.log1p(-x[:, 1])))
    if code == 2:
        return 1.0 / np.log(x[:, 0] * x[:, 1])
    if code == 3:
        return x[:, 0] * x[:, 1]
    raise ValueError(f"unknown integrand code {code}")


def inside(kind: int, x: np.ndarray) -> np.ndarray:
    dim = x.shape[1]
    ok = np.ones(len(x), dtype=bool)
    if kind == 3:
        for j in range(1, dim):
            ok &= x[:, 0] + x[:, j] >= 1.0
    elif kind == 4:
        for i in range(dim):
            for j in range(i + 1, dim):
                ok &= x[:, i] + x[:, j] >= 1.0
    return ok


def sample_points(kind: int, dim: int, key: int, start: int, count: int) -> np.ndarray:
    """Draws ``start .. start+count-1`` of a stream, folded for T and H."""
    x = uniforms(key, start * dim, count * dim).reshape(count, dim)
    if kind in (1, 2):
        flip = x[:, 0] + x[:, 1] < 1.0
        x[flip, :2] = 1.0 - x[flip, :2]
        if kind == 2:
            lo = np.minimum(x[:, 0], x[:, 1])
            hi = np.maximum(x[:, 0], x[:, 1])
            x[:, 0], x[:, 1] = lo, hi
    return x


def per_draw(kind: int, x: np.ndarray, f) -> np.ndarray:
    if kind in (0, 1, 2):
        volume = {0: 1.0, 1: 0.5, 2: 0.25}[kind]
        return volume * f(x)
    values = np.zeros(len(x))
    ok = inside(kind, x)
    if ok.any():
        values[ok] = f(x[ok])
    return values


def mc_polytope(kind: int, dim: int, integrand: int, samples: int, seed: int,
                stream: int, chunk: int = 1 << 18):
    key = stream_key(seed, stream)
    s = 0.0
    s2 = 0.0
    done = 0
    while done < samples:
        count = min(chunk, samples - done)
        x = sample_points(kind, dim, key, done, count)
        v = per_draw(kind, x, lambda pts: integrand_values(integrand, pts))
        s += float(v.sum())
        s2 += float((v * v).sum())
        done += count
    return s, s2
