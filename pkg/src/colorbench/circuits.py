"""Pauli-frame simulation of timed Clifford circuits, and CNOT-schedule
construction, validation, enumeration and ranking support for the 2D
color code's syndrome extraction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import noise as _noise
from .lattice import ColorLattice

# opcodes
P0, PP, MX, MZ, CX, IDLE = range(6)

_OP_NAMES = {P0: "P0", PP: "P+", MX: "MX", MZ: "MZ", CX: "CX", IDLE: "I"}


@dataclass
class PauliFrame:
    """Net Pauli applied by noise, as X/Z bitmasks over qubit ids."""
    x: int = 0
    z: int = 0

    def copy(self):
        return PauliFrame(self.x, self.z)

    def __xor__(self, other):
        return PauliFrame(self.x ^ other.x, self.z ^ other.z)


class TimedCircuit:
    """Layers of one-time-unit primitives; one op per qubit per layer.

    Layers are built op-by-op and then compiled into per-layer arrays
    grouping qubits by noise category, which makes the per-trial noise
    sampling vectorizable.
    """

    def __init__(self, n_qubits):
        self.n_qubits = n_qubits
        self.layers = []
        self.n_records = 0
        self._compiled = None

    def add_layer(self, ops):
        seen = set()
        for op in ops:
            qs = op[1:3] if op[0] == CX else op[1:2]
            for q in qs:
                if q in seen:
                    raise ValueError(
                        f"qubit {q} used twice in layer {len(self.layers)}")
                seen.add(q)
        self.layers.append(list(ops))
        self._compiled = None

    def new_record(self):
        slot = self.n_records
        self.n_records += 1
        return slot

    def compiled(self):
        if self._compiled is None:
            out = []
            for ops in self.layers:
                prep, meas, single, pairs = [], [], [], []
                for op in ops:
                    if op[0] in (P0, PP):
                        prep.append(op[1])
                    elif op[0] in (MX, MZ):
                        meas.append(op[1])
                    elif op[0] == CX:
                        pairs.append((op[1], op[2]))
                    else:
                        single.append(op[1])
                out.append((ops, prep, meas, single, pairs))
            self._compiled = out
        return self._compiled


def run(circuit: TimedCircuit, p: float, frame_in: PauliFrame, rng):
    """Propagate a Pauli frame through the circuit under circuit noise.

    Ideal Cliffords act on the frame; depolarizing noise of strength p is
    XORed in after each primitive; preparation faults flip to the
    orthogonal state; measurement faults flip the recorded bit (not the
    frame).  Returns (records, frame_out).
    """
    x, z = frame_in.x, frame_in.z
    records = bytearray(circuit.n_records)
    for ops, prep, meas, single, pairs in circuit.compiled():
        flips = 0
        if p > 0.0 and (prep or meas):
            flips = _noise.flip_mask(prep + meas, p, rng)
        for op in ops:
            kind = op[0]
            if kind == CX:
                c, t = op[1], op[2]
                if (x >> c) & 1:
                    x ^= 1 << t
                if (z >> t) & 1:
                    z ^= 1 << c
            elif kind == MX:
                q, slot = op[1], op[2]
                records[slot] = ((z >> q) ^ (flips >> q)) & 1
            elif kind == MZ:
                q, slot = op[1], op[2]
                records[slot] = ((x >> q) ^ (flips >> q)) & 1
            elif kind == P0:
                q = op[1]
                bit = 1 << q
                x &= ~bit
                z &= ~bit
                if (flips >> q) & 1:
                    x |= bit
            elif kind == PP:
                q = op[1]
                bit = 1 << q
                x &= ~bit
                z &= ~bit
                if (flips >> q) & 1:
                    z |= bit
        if p > 0.0:
            if single:
                dx, dz = _noise.depolarize_single(single, p, rng)
                x ^= dx
                z ^= dz
            if pairs:
                dx, dz = _noise.depolarize_pairs(pairs, p, rng)
                x ^= dx
                z ^= dz
    return records, PauliFrame(x, z)


# -- CNOT schedules --------------------------------------------------------

# the published best and worst seven-unit schedules for error correction,
# and the best schedule for T-state initialization
BEST_SCHEDULE = (4, 1, 2, 3, 6, 5, 3, 2, 5, 6, 7, 4)
WORST_SCHEDULE_7 = (4, 1, 2, 7, 6, 3, 1, 6, 7, 4, 5, 2)
BEST_INIT_SCHEDULE = (1, 4, 6, 7, 5, 2, 4, 5, 7, 6, 2, 3)


def validate_schedule(s):
    """Check the three validity conditions; returns (ok, reason)."""
    if len(s) != 12 or any(not isinstance(v, int) or v < 1 for v in s):
        return False, "schedule must be twelve positive integers"
    a, b, c, d, e, f, g, h, i, j, k, l = s
    m = max(s)
    if m > 12 or set(range(1, m + 1)) - set(s):
        return False, "condition 1: time units not contiguous from 1"
    for grp in ((a, b, c, d, e, f), (g, h, i, j, k, l),
                (d, j, f, l, b, h), (e, k, a, g, c, i)):
        if len(set(grp)) != 6:
            return False, "condition 2: repeated time unit on a shared qubit"
    bulk = [(a - g) * (b - h) * (c - i) * (d - j) * (e - k) * (f - l),
            (e - g) * (d - h), (k - a) * (j - b),
            (f - h) * (e - i), (l - b) * (k - c),
            (d - l) * (c - g), (j - f) * (i - a)]
    if any(v <= 0 for v in bulk):
        return False, "condition 3: bulk syndrome propagation broken"
    bdry = [(a - g) * (b - h) * (c - i) * (f - l),
            (b - h) * (c - i) * (d - j) * (e - k),
            (a - g) * (d - j) * (e - k) * (f - l)]
    if any(v <= 0 for v in bdry):
        return False, "condition 3: boundary syndrome propagation broken"
    return True, None


# symmetry action on schedules: rotations of the six face positions by
# two steps, the position reflection, and the X/Z ancilla swap
def _apply_perm(s, perm):
    out = [0] * 12
    for i in range(12):
        out[perm[i]] = s[i]
    return tuple(out)


def _symmetry_group():
    ident = tuple(range(12))
    rot2 = tuple([(i + 2) % 6 for i in range(6)] +
                 [6 + (i + 2) % 6 for i in range(6)])
    refl = tuple([5 - i for i in range(6)] + [6 + (5 - i) for i in range(6)])
    swap = tuple(list(range(6, 12)) + list(range(6)))
    group = {ident}
    frontier = [ident]
    gens = [rot2, refl, swap]
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                gh = tuple(g[h[i]] for i in range(12))
                if gh not in group:
                    group.add(gh)
                    new.append(gh)
        frontier = new
    return sorted(group)


_GROUP = _symmetry_group()


def canonical_schedule(s):
    """Lexicographically smallest schedule in the symmetry orbit of s."""
    return min(_apply_perm(s, g) for g in _GROUP)


def enumerate_schedules(max_time, dedup=True):
    """All valid schedules using exactly the time units 1..max_time.

    With dedup=True the list is reduced to canonical representatives
    under the lattice-symmetry group, reproducing the published counts
    (234 / 4854 / 39160 for 7 / 8 / 9 units).
    """
    if max_time < 1 or max_time > 12:
        raise ValueError("max_time must be in 1..12")
    T = max_time
    vals = range(1, T + 1)
    out = set()
    # assign (a..f) then (g..l) with incremental constraint checks
    for abcdef in itertools.permutations(vals, 6):
        a, b, c, d, e, f = abcdef
        odd1 = {a, c, e}
        even1 = {b, d, f}
        for g in vals:
            if g in odd1:
                continue
            for h in vals:
                if h == g or h in even1:
                    continue
                if (e - g) * (d - h) <= 0:
                    continue
                for i in vals:
                    if i in (g, h) or i in odd1:
                        continue
                    if (f - h) * (e - i) <= 0:
                        continue
                    for j in vals:
                        if j in (g, h, i) or j in even1:
                            continue
                        if (j - f) * (i - a) <= 0:
                            continue
                        for k in vals:
                            if k in (g, h, i, j) or k in odd1:
                                continue
                            if (k - a) * (j - b) <= 0:
                                continue
                            for l in vals:
                                if l in (g, h, i, j, k) or l in even1:
                                    continue
                                if (l - b) * (k - c) <= 0:
                                    continue
                                if (d - l) * (c - g) <= 0:
                                    continue
                                s = (a, b, c, d, e, f, g, h, i, j, k, l)
                                if max(s) != T:
                                    continue
                                ok, _ = validate_schedule(s)
                                if not ok:
                                    continue
                                out.add(canonical_schedule(s) if dedup else s)
    return sorted(out)
