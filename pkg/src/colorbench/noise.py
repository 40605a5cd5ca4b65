"""Noise channels: depolarizing / phenomenological / circuit scenarios,
the physical reference error probability, and the twirled T-state model.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SCENARIOS = ("depolarizing", "phenomenological", "circuit")

# two-qubit depolarizing table: nontrivial (x1,z1,x2,z2) in a fixed order
_PAULI2 = [(x1, z1, x2, z2)
           for x1 in (0, 1) for z1 in (0, 1)
           for x2 in (0, 1) for z2 in (0, 1)][1:]
assert len(_PAULI2) == 15


@dataclass(frozen=True)
class NoiseModel:
    scenario: str
    p: float

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ValueError(f"unknown scenario {self.scenario!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"noise strength {self.p} outside [0, 1]")


@dataclass(frozen=True)
class TStateError:
    """Twirled T-state noise: a Z flip with probability q (infidelity)."""
    q: float

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"infidelity {self.q} outside [0, 1]")


def p_phy(t: int, p: float) -> float:
    """Probability that t single-qubit depolarizing steps compose to a
    nontrivial Pauli.  p_phy(1) = p; the t -> infinity limit is 3/4."""
    if t < 0:
        raise ValueError("time must be nonnegative")
    return 0.75 * (1.0 - (1.0 - 4.0 * p / 3.0) ** t)


def sample_gate_noise(arity: int, p: float, rng) -> tuple:
    """One draw of the depolarizing channel.

    arity 1 -> (x, z) bits; arity 2 -> (x1, z1, x2, z2) bits.
    """
    if arity == 1:
        if rng.random() >= p:
            return (0, 0)
        k = rng.integers(3)
        return ((1, 0), (1, 1), (0, 1))[k]
    if arity == 2:
        if rng.random() >= p:
            return (0, 0, 0, 0)
        return _PAULI2[rng.integers(15)]
    raise ValueError("arity must be 1 or 2")


def sample_t_error(q: float, rng) -> int:
    """1 if the twirled T state suffered a Z flip, else 0."""
    return int(rng.random() < q)


# -- vectorized helpers used by the circuit simulator ---------------------

def depolarize_single(qubits, p, rng):
    """Sample iid single-qubit depolarizing on the given qubit ids.

    Returns (xmask, zmask) integer bitmasks.  Only draws detailed Pauli
    kinds for the (sparse) error positions.
    """
    n = len(qubits)
    if n == 0 or p == 0.0:
        return 0, 0
    u = rng.random(n)
    hits = np.flatnonzero(u < p)
    x = z = 0
    if len(hits) == 0:
        return 0, 0
    kinds = rng.integers(0, 3, size=len(hits))
    for h, k in zip(hits, kinds):
        q = qubits[h]
        if k != 2:
            x |= 1 << q
        if k != 0:
            z |= 1 << q
    return x, z


def depolarize_pairs(pairs, p, rng):
    """Sample iid two-qubit depolarizing on the given (q1, q2) pairs."""
    n = len(pairs)
    if n == 0 or p == 0.0:
        return 0, 0
    u = rng.random(n)
    hits = np.flatnonzero(u < p)
    x = z = 0
    if len(hits) == 0:
        return 0, 0
    kinds = rng.integers(0, 15, size=len(hits))
    for h, k in zip(hits, kinds):
        q1, q2 = pairs[h]
        x1, z1, x2, z2 = _PAULI2[k]
        if x1:
            x |= 1 << q1
        if z1:
            z |= 1 << q1
        if x2:
            x |= 1 << q2
        if z2:
            z |= 1 << q2
    return x, z


def flip_mask(qubits, p, rng):
    """Bernoulli(p) flips on the given qubit ids, as a bitmask."""
    n = len(qubits)
    if n == 0 or p == 0.0:
        return 0
    u = rng.random(n)
    m = 0
    for h in np.flatnonzero(u < p):
        m |= 1 << qubits[h]
    return m


def trial_rng(seed: int, trial: int, stream: int = 0):
    """Counter-based per-trial generator: reproducible and parallel-safe.

    Philox keys are two 64-bit words; we pack (seed, stream) into one and
    the trial index into the other, so every (seed, stream, trial) triple
    owns an independent stream regardless of execution order.
    """
    key0 = (int(seed) * 0x9E3779B97F4A7C15 + int(stream)) % (1 << 64)
    return np.random.Generator(np.random.Philox(key=[key0, int(trial)]))
