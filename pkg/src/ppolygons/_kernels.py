"""Compiled inner loops for exhaustive enumeration.

Step sequences are packed into int64 codes, most significant digit first in
base p, so integer order equals lexicographic order of the steps. This is
exact for p <= 13 (13**13 < 2**63).
"""

from __future__ import annotations

import numpy as np
from numba import njit

REGULAR, ONE_AXIS, ASYMMETRIC = 0, 1, 2


@njit(cache=True)
def encode(steps, p):
    code = 0
    for d in steps:
        code = code * p + d
    return code


@njit(cache=True)
def decode(code, p):
    out = np.empty(p, np.int64)
    for i in range(p - 1, -1, -1):
        out[i] = code % p
        code //= p
    return out


@njit(cache=True)
def _min_shift_code(seq, p):
    best = -1
    for r in range(p):
        code = 0
        for i in range(p):
            code = code * p + seq[(r + i) % p]
        if best < 0 or code < best:
            best = code
    return best


@njit(cache=True)
def canonical_code(steps, p):
    rev = np.empty(p, np.int64)
    for i in range(p):
        rev[i] = p - steps[p - 1 - i]
    return min(_min_shift_code(steps, p), _min_shift_code(rev, p))


@njit(cache=True)
def mirror_code(steps, p):
    neg = np.empty(p, np.int64)
    rev = np.empty(p, np.int64)
    for i in range(p):
        neg[i] = p - steps[i]
        rev[i] = steps[p - 1 - i]
    return min(_min_shift_code(neg, p), _min_shift_code(rev, p))


@njit(cache=True)
def axis_count_steps(steps, p):
    adj = np.zeros((p, p), np.bool_)
    verts = np.empty(p, np.int64)
    v = 0
    for i in range(p):
        verts[i] = v
        v = (v + steps[i]) % p
    for i in range(p):
        a = verts[i]
        b = verts[(i + 1) % p]
        adj[a, b] = True
        adj[b, a] = True
    count = 0
    for c in range(p):
        ok = True
        for i in range(p):
            a = (c - verts[i]) % p
            b = (c - verts[(i + 1) % p]) % p
            if not adj[a, b]:
                ok = False
                break
        if ok:
            count += 1
    return count


@njit(cache=True)
def all_canonical_codes(p):
    """Canonical code of every ordering that starts at vertex 0.

    Plain depth-first walk over vertex permutations; no pruning.
    """
    n = 1
    for k in range(2, p):
        n *= k
    out = np.empty(n, np.int64)
    verts = np.zeros(p, np.int64)
    used = np.zeros(p, np.bool_)
    used[0] = True
    nxt = np.ones(p, np.int64)
    steps = np.empty(p, np.int64)
    depth = 1
    nxt[1] = 1
    filled = 0
    while depth > 0:
        if depth == p:
            for i in range(p):
                steps[i] = (verts[(i + 1) % p] - verts[i]) % p
            out[filled] = canonical_code(steps, p)
            filled += 1
            depth -= 1
            used[verts[depth]] = False
            continue
        v = nxt[depth]
        while v < p and used[v]:
            v += 1
        if v == p:
            depth -= 1
            if depth > 0:
                used[verts[depth]] = False
            continue
        nxt[depth] = v + 1
        verts[depth] = v
        used[v] = True
        depth += 1
        if depth < p:
            nxt[depth] = 1
    return out


@njit(cache=True)
def classify_codes(codes, p):
    """Per canonical code: mirror code, symmetry tag, axis count."""
    n = codes.shape[0]
    mirrors = np.empty(n, np.int64)
    tags = np.empty(n, np.int64)
    axes = np.empty(n, np.int64)
    for k in range(n):
        steps = decode(codes[k], p)
        mirrors[k] = mirror_code(steps, p)
        constant = True
        for i in range(1, p):
            if steps[i] != steps[0]:
                constant = False
                break
        if constant:
            tags[k] = REGULAR
        elif mirrors[k] == codes[k]:
            tags[k] = ONE_AXIS
        else:
            tags[k] = ASYMMETRIC
        axes[k] = axis_count_steps(steps, p)
    return mirrors, tags, axes


@njit(cache=True)
def _prefix_ok(s, length, p):
    """False if some shift or reflected shift already beats the prefix."""
    k = length - 1
    # shifts: s[j..k] against s[0..k-j]
    for j in range(1, length):
        for t in range(length - j):
            a = s[j + t]
            b = s[t]
            if a != b:
                if a < b:
                    return False
                break
    # reflected shifts: p - s[k], p - s[k-1], ..., p - s[j] against s[0..k-j]
    for j in range(length - 1, -1, -1):
        for t in range(k - j + 1):
            a = p - s[k - t]
            b = s[t]
            if a != b:
                if a < b:
                    return False
                break
    return True


@njit(cache=True)
def _leaf_tag(s, p):
    """-1 unless ``s`` is its own canonical form; else its symmetry tag."""
    for r in range(1, p):
        for t in range(p):
            a = s[(r + t) % p]
            b = s[t]
            if a != b:
                if a < b:
                    return -1
                break
    for r in range(p):
        # reversed traversal read from position r: p - s[r], p - s[r-1], ...
        for t in range(p):
            a = p - s[(r - t) % p]
            b = s[t]
            if a != b:
                if a < b:
                    return -1
                break
    constant = True
    for i in range(1, p):
        if s[i] != s[0]:
            constant = False
            break
    if constant:
        return REGULAR
    # achiral iff s is a shift of its mirror image, i.e. of reversed(s)
    for r in range(p):
        equal = True
        for t in range(p):
            if s[t] != s[(r - t) % p]:
                equal = False
                break
        if equal:
            return ONE_AXIS
    return ASYMMETRIC


@njit(cache=True)
def count_from_prefix(p, prefix, prune):
    """Tally (regular, one_axis, asymmetric) over all completions of ``prefix``.

    A completion is counted only when its step sequence is already canonical,
    so every class is counted exactly once across all prefixes.
    """
    tally = np.zeros(3, np.int64)
    s = np.zeros(p, np.int64)
    used = np.zeros(p, np.bool_)
    used[0] = True
    cur = 0
    base = prefix.shape[0]
    for i in range(base):
        s[i] = prefix[i]
        cur = (cur + prefix[i]) % p
        if used[cur]:
            return tally
        used[cur] = True
        if prune and not _prefix_ok(s, i + 1, p):
            return tally
    pos = np.zeros(p + 1, np.int64)  # vertex reached after `depth` steps
    pos[base] = cur
    nxt = np.ones(p, np.int64)
    depth = base
    while True:
        if depth == p - 1:
            s[p - 1] = (p - pos[depth]) % p
            tag = _leaf_tag(s, p)
            if tag >= 0:
                tally[tag] += 1
            depth -= 1
            if depth < base:
                break
            used[pos[depth + 1]] = False
            continue
        d = nxt[depth]
        v = 0
        placed = False
        while d < p:
            v = (pos[depth] + d) % p
            if not used[v]:
                s[depth] = d
                if not prune or _prefix_ok(s, depth + 1, p):
                    placed = True
                    break
            d += 1
        if not placed:
            depth -= 1
            if depth < base:
                break
            used[pos[depth + 1]] = False
            continue
        nxt[depth] = d + 1
        pos[depth + 1] = v
        used[v] = True
        depth += 1
        if depth < p - 1:
            nxt[depth] = 1
    return tally


def prefixes(p: int, length: int) -> np.ndarray:
    """All step prefixes of ``length`` visiting distinct non-zero vertices."""
    out: list[list[int]] = [[]]
    for _ in range(length):
        grown = []
        for pre in out:
            seen = {0}
            acc = 0
            for d in pre:
                acc = (acc + d) % p
                seen.add(acc)
            for d in range(1, p):
                if (acc + d) % p not in seen:
                    grown.append(pre + [d])
        out = grown
    return np.array(out, dtype=np.int64).reshape(len(out), length)
