"""Seeded Monte Carlo for cyclic-polytope volumes and odd zeta values.

Estimates are reproducible bit-for-bit across machines, languages, and
worker counts, so the random-number pipeline is pinned down completely:

* SplitMix64 (seeding only).  From a 64-bit state:
  ``state += 0x9E3779B97F4A7C15`` (GOLDEN), then mix that value z by
  ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``,
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``, output ``z ^ (z >> 31)``;
  all arithmetic mod 2^64.
* xoshiro256** (sampling).  State (s0, s1, s2, s3), never all zero;
  output ``rotl(s1 * 5, 7) * 9``; then ``t = s1 << 17; s2 ^= s0;
  s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t; s3 = rotl(s3, 45)``.
* Substreams.  Samples are assigned to fixed chunks of cfg.chunk_size;
  chunk c's xoshiro state is outputs 4c+1 .. 4c+4 of the SplitMix64
  stream seeded with cfg.seed (computed locally by starting SplitMix64
  at ``seed + 4 c GOLDEN`` mod 2^64), with s0 := GOLDEN in the
  astronomically unlikely all-zero case.
* Uniform doubles.  ``(word >> 11) * 2.0**-53`` in [0, 1); every sample
  consumes exactly ``dimension`` words, hit or miss.

Reductions run in fixed chunk order (integer hit counts; exact fsum for
the log-tan accumulators), so the worker count never changes a result.

The hot loops are numba-compiled; ``_volume_chunk_py`` and
``_zeta_chunk_py`` are plain-Python renditions of the same chunk
contract, kept as an independent route for the tests to diff against.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1

_U = np.uint64
_GOLDEN = _U(GOLDEN)
_SM_M1 = _U(0xBF58476D1CE4E5B9)
_SM_M2 = _U(0x94D049BB133111EB)
_S30, _S27, _S31 = _U(30), _U(27), _U(31)
_S7, _S57, _S17, _S45, _S19, _S11 = _U(7), _U(57), _U(17), _U(45), _U(19), _U(11)
_FIVE, _NINE, _FOUR, _ZERO = _U(5), _U(9), _U(4), _U(0)
_TWO_NEG53 = 2.0 ** -53
_HALF_PI = 0.5 * math.pi


def splitmix64_next(state: int) -> tuple[int, int]:
    """One SplitMix64 step: (new_state, output), both in [0, 2^64)."""
    state = (state + GOLDEN) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


def xoshiro256ss_next(s: tuple[int, int, int, int]) -> tuple[tuple[int, int, int, int], int]:
    """One xoshiro256** step: (new_state, output word)."""
    s0, s1, s2, s3 = s
    r = (s1 * 5) & _MASK
    result = (((r << 7 | r >> 57) & _MASK) * 9) & _MASK
    t = (s1 << 17) & _MASK
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = (s3 << 45 | s3 >> 19) & _MASK
    return (s0, s1, s2, s3), result


def chunk_state(seed: int, chunk_index: int) -> tuple[int, int, int, int]:
    """xoshiro256** state for one chunk: SplitMix64 outputs 4c+1 .. 4c+4."""
    state = (seed + 4 * chunk_index * GOLDEN) & _MASK
    words = []
    for _ in range(4):
        state, z = splitmix64_next(state)
        words.append(z)
    if not any(words):
        words[0] = GOLDEN
    return tuple(words)


def word_to_double(word: int) -> float:
    """The uniform double in [0, 1) carried by a 64-bit word."""
    return (word >> 11) * _TWO_NEG53


def in_delta(point: Sequence[float], n: int) -> bool:
    """Strict membership in the open cyclic polytope of dimension n.

    True iff u_i > 0 and u_i + u_{i+1} < 1 for every i, indices cyclic
    (u_{n+1} is u_1).  Boundary points count as outside: the polytope is
    open and its boundary has measure zero.
    """
    if len(point) != n:
        raise ValueError(f"point has length {len(point)}, expected {n}")
    for u in point:
        if not 0.0 <= u <= 1.0:
            raise ValueError("coordinates must lie in [0, 1]")
    for i in range(n):
        u, nxt = point[i], point[(i + 1) % n]
        if not (u > 0.0 and u + nxt < 1.0):
            return False
    return True


@dataclass(frozen=True)
class McConfig:
    """A fully reproducible Monte Carlo run description."""

    dimension: int
    samples: int
    seed: int
    chunk_size: int = 65536

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise ValueError("dimension must be >= 2")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")


@dataclass(frozen=True)
class McEstimate:
    """Estimate with its sample standard error.

    clamped counts samples whose log-tan integrand was non-finite and
    got dropped from the accumulators; expected 0 (see mc_zeta_odd) and
    always 0 for plain volume estimates.
    """

    mean: float
    stderr: float
    samples: int
    seed: int
    clamped: int = 0


@njit("UniTuple(uint64, 4)(uint64, uint64)", cache=True, nogil=True)
def _chunk_state_nb(seed, chunk_index):
    state = seed + _FOUR * chunk_index * _GOLDEN
    s = np.empty(4, dtype=np.uint64)
    for i in range(4):
        state = state + _GOLDEN
        z = state
        z = (z ^ (z >> _S30)) * _SM_M1
        z = (z ^ (z >> _S27)) * _SM_M2
        s[i] = z ^ (z >> _S31)
    if (s[0] | s[1] | s[2] | s[3]) == _ZERO:
        s[0] = _GOLDEN
    return s[0], s[1], s[2], s[3]


@njit("int64(uint64, uint64, int64, int64)", cache=True, nogil=True)
def _volume_chunk(seed, chunk_index, count, dim):
    s0, s1, s2, s3 = _chunk_state_nb(seed, chunk_index)
    point = np.empty(dim, dtype=np.float64)
    hits = 0
    for _ in range(count):
        for d in range(dim):
            r = s1 * _FIVE
            r = ((r << _S7) | (r >> _S57)) * _NINE
            t = s1 << _S17
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = (s3 << _S45) | (s3 >> _S19)
            point[d] = float(r >> _S11) * _TWO_NEG53
        ok = True
        for d in range(dim):
            if not point[d] > 0.0:
                ok = False
                break
            nxt = point[d + 1] if d + 1 < dim else point[0]
            if not point[d] + nxt < 1.0:
                ok = False
                break
        if ok:
            hits += 1
    return hits


@njit(
    "Tuple((float64, float64, int64, int64))(uint64, uint64, int64, int64)",
    cache=True,
    nogil=True,
)
def _zeta_chunk(seed, chunk_index, count, dim):
    s0, s1, s2, s3 = _chunk_state_nb(seed, chunk_index)
    point = np.empty(dim, dtype=np.float64)
    sum_x = 0.0
    sum_x2 = 0.0
    hits = 0
    clamped = 0
    for _ in range(count):
        for d in range(dim):
            r = s1 * _FIVE
            r = ((r << _S7) | (r >> _S57)) * _NINE
            t = s1 << _S17
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = (s3 << _S45) | (s3 >> _S19)
            point[d] = float(r >> _S11) * _TWO_NEG53
        ok = True
        for d in range(dim):
            if not point[d] > 0.0:
                ok = False
                break
            nxt = point[d + 1] if d + 1 < dim else point[0]
            if not point[d] + nxt < 1.0:
                ok = False
                break
        if ok:
            # inside the polytope 0 < u_1 < 1 strictly, so tan is finite
            # for every representable u_1; the guard is belt-and-braces
            g = np.log(np.tan(_HALF_PI * point[0]))
            if np.isfinite(g):
                sum_x += g
                sum_x2 += g * g
                hits += 1
            else:
                clamped += 1
    return sum_x, sum_x2, hits, clamped


def _volume_chunk_py(seed: int, chunk_index: int, count: int, dim: int) -> int:
    """Plain-Python mirror of _volume_chunk, for cross-implementation tests."""
    s = chunk_state(seed, chunk_index)
    hits = 0
    point = [0.0] * dim
    for _ in range(count):
        for d in range(dim):
            s, word = xoshiro256ss_next(s)
            point[d] = word_to_double(word)
        if all(point[d] > 0.0 and point[d] + point[(d + 1) % dim] < 1.0 for d in range(dim)):
            hits += 1
    return hits


def _zeta_chunk_py(seed: int, chunk_index: int, count: int, dim: int) -> tuple[float, float, int, int]:
    """Plain-Python mirror of _zeta_chunk, for cross-implementation tests."""
    s = chunk_state(seed, chunk_index)
    sum_x = sum_x2 = 0.0
    hits = clamped = 0
    point = [0.0] * dim
    for _ in range(count):
        for d in range(dim):
            s, word = xoshiro256ss_next(s)
            point[d] = word_to_double(word)
        if all(point[d] > 0.0 and point[d] + point[(d + 1) % dim] < 1.0 for d in range(dim)):
            g = math.log(math.tan(_HALF_PI * point[0]))
            if math.isfinite(g):
                sum_x += g
                sum_x2 += g * g
                hits += 1
            else:
                clamped += 1
    return sum_x, sum_x2, hits, clamped


def _chunk_counts(cfg: McConfig) -> list[int]:
    full, rem = divmod(cfg.samples, cfg.chunk_size)
    counts = [cfg.chunk_size] * full
    if rem:
        counts.append(rem)
    return counts


def _run_chunks(kernel, cfg: McConfig, workers: int) -> list:
    counts = _chunk_counts(cfg)
    seed = _U(cfg.seed)

    def run(c: int):
        return kernel(seed, _U(c), counts[c], cfg.dimension)

    if workers <= 1:
        return [run(c) for c in range(len(counts))]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, range(len(counts))))  # map keeps chunk order


def mc_volume(cfg: McConfig, workers: int = 1) -> McEstimate:
    """Hit-fraction estimate of the cyclic-polytope volume delta_n.

    mean is the hit fraction; stderr is sqrt(p(1-p)/samples).  The
    estimate is a pure function of cfg: chunk substreams and the
    fixed-order reduction make the worker count irrelevant to the bits
    of the result.
    """
    hits = sum(_run_chunks(_volume_chunk, cfg, workers))
    p = hits / cfg.samples
    stderr = math.sqrt(p * (1.0 - p) / cfg.samples)
    return McEstimate(mean=p, stderr=stderr, samples=cfg.samples, seed=cfg.seed)


def mc_zeta_odd(n: int, cfg: McConfig, workers: int = 1) -> McEstimate:
    """Monte Carlo zeta(2n+1) from the log-tan integral over the polytope.

    zeta(2n+1) = -(2^(2n+1)/(2^(2n+1)-1)) (pi/2)^(2n) times the mean of
    ln(tan(u_1 pi/2)) * [point in polytope] over uniform [0,1]^(2n), so
    cfg.dimension must equal 2n.  mean and stderr are the sample mean
    and standard error (ddof=1) of that integrand, scaled by the
    constant prefactor.  Misses contribute 0; the integrand is negative
    where it contributes, the prefactor negative, the estimate positive.
    Non-finite log-tan values (unreachable for representable interior
    u_1, kept as a defensive guard) are dropped and counted in clamped.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if cfg.dimension != 2 * n:
        raise ValueError(f"cfg.dimension must be 2n = {2 * n}, got {cfg.dimension}")
    parts = _run_chunks(_zeta_chunk, cfg, workers)
    total = cfg.samples
    sum_x = math.fsum(p[0] for p in parts)
    sum_x2 = math.fsum(p[1] for p in parts)
    clamped = sum(p[3] for p in parts)
    kept = total - clamped
    mean_x = sum_x / kept
    pref = -(2.0 ** (2 * n + 1) / (2.0 ** (2 * n + 1) - 1.0)) * (math.pi / 2.0) ** (2 * n)
    if kept > 1:
        var_x = max(sum_x2 - kept * mean_x * mean_x, 0.0) / (kept - 1)
        stderr = abs(pref) * math.sqrt(var_x / kept)
    else:
        stderr = math.inf
    return McEstimate(
        mean=pref * mean_x,
        stderr=stderr,
        samples=total,
        seed=cfg.seed,
        clamped=clamped,
    )
