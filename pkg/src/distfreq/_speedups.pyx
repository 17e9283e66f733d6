# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
# distutils: language = c++
"""Compiled kernels: bitmask BFS histograms, subset search, and graph census.

Same interface, candidate order, and statuses as the pure-Python fallback
in _kernels_py. Node counts are capped by the 64-bit edge mask (n <= 11
for masks and search, n <= 7 for the census key packing).
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_set cimport unordered_set

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

SEARCH_FOUND = 0
SEARCH_EXHAUSTED = 1
SEARCH_ABORTED = 2

MAX_CENSUS_NODES = 7

cdef int _MAX_NODES = 11  # 11*10/2 = 55 edge bits fit a uint64 mask


cdef inline void _fill_endpoints(int n, int* eu, int* ev) nogil:
    cdef int u, v, i = 0
    for u in range(n):
        for v in range(u + 1, n):
            eu[i] = u
            ev[i] = v
            i += 1


cdef int _alpha_for_adjacency(int n, uint64_t* adj, int* counts) nogil:
    # Bitmask BFS per source, tallying only targets above the source.
    # Returns 0 when the graph is disconnected (counts then unusable).
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef uint64_t seen, frontier, reach, work
    cdef int source, dist, i
    for i in range(n - 1):
        counts[i] = 0
    for source in range(n):
        seen = <uint64_t>1 << source
        frontier = seen
        dist = 0
        while True:
            reach = 0
            work = frontier
            while work:
                reach |= adj[__builtin_ctzll(work)]
                work &= work - 1
            reach &= ~seen
            if reach == 0:
                break
            seen |= reach
            dist += 1
            counts[dist - 1] += __builtin_popcountll(reach >> (source + 1))
            frontier = reach
        if seen != full:
            return 0
    return 1


cdef inline void _check_n(int n, int maximum) except *:
    if n < 2 or n > maximum:
        raise ValueError(f"compiled kernel supports 2 <= n <= {maximum}, got {n}")


def alpha_for_mask(int n, object mask):
    """Distance frequency array of the masked edge set, or None if disconnected."""
    _check_n(n, _MAX_NODES)
    cdef int m = n * (n - 1) // 2
    if mask >> m:
        raise ValueError("mask has bits beyond the edge count")
    cdef uint64_t emask = <uint64_t>mask
    cdef int eu[64]
    cdef int ev[64]
    cdef uint64_t adj[11]
    cdef int counts[10]
    cdef int i, index
    _fill_endpoints(n, eu, ev)
    for i in range(n):
        adj[i] = 0
    cdef uint64_t work = emask
    while work:
        index = __builtin_ctzll(work)
        work &= work - 1
        adj[eu[index]] |= <uint64_t>1 << ev[index]
        adj[ev[index]] |= <uint64_t>1 << eu[index]
    if not _alpha_for_adjacency(n, adj, counts):
        return None
    return tuple(counts[i] for i in range(n - 1))


def search_exact(int n, object target, int64_t limit=-1):
    """Scan edge subsets of size target[0] for one matching the target frequencies.

    Identical semantics to the pure-Python kernel: lexicographic
    combination order, (status, witness_mask, candidates_examined) result,
    negative limit means unlimited.
    """
    _check_n(n, _MAX_NODES)
    tgt = tuple(target)
    if len(tgt) != n - 1:
        raise ValueError(f"target length must be n-1 = {n - 1}, got {len(tgt)}")
    cdef int m = n * (n - 1) // 2
    cdef int tcounts[10]
    cdef int i
    for i in range(n - 1):
        tcounts[i] = tgt[i]
    cdef int k = tcounts[0]
    cdef int64_t examined = 0
    if k < 0 or k > m:
        return SEARCH_EXHAUSTED, 0, examined
    cdef int eu[64]
    cdef int ev[64]
    cdef int idx[64]
    cdef uint64_t adj[11]
    cdef int counts[10]
    cdef int pos, j
    cdef bint match
    _fill_endpoints(n, eu, ev)
    for i in range(k):
        idx[i] = i
    while True:
        if limit >= 0 and examined >= limit:
            return SEARCH_ABORTED, 0, examined
        examined += 1
        for i in range(n):
            adj[i] = 0
        for i in range(k):
            adj[eu[idx[i]]] |= <uint64_t>1 << ev[idx[i]]
            adj[ev[idx[i]]] |= <uint64_t>1 << eu[idx[i]]
        if _alpha_for_adjacency(n, adj, counts):
            match = True
            for i in range(n - 1):
                if counts[i] != tcounts[i]:
                    match = False
                    break
            if match:
                mask = 0
                for i in range(k):
                    mask |= 1 << idx[i]
                return SEARCH_FOUND, mask, examined
        # advance to the next combination in lexicographic order
        pos = k - 1
        while pos >= 0 and idx[pos] == m - k + pos:
            pos -= 1
        if pos < 0:
            return SEARCH_EXHAUSTED, 0, examined
        idx[pos] += 1
        for j in range(pos + 1, k):
            idx[j] = idx[j - 1] + 1


def census(int n):
    """All distinct frequency arrays of connected graphs on n labeled nodes."""
    _check_n(n, MAX_CENSUS_NODES)
    cdef int m = n * (n - 1) // 2
    cdef int minimum = n - 1
    cdef int eu[21]
    cdef int ev[21]
    cdef uint64_t adj[7]
    cdef int counts[6]
    cdef unordered_set[uint64_t] keys
    cdef uint64_t mask, work, key
    cdef uint64_t total = <uint64_t>1 << m
    cdef int i, index
    _fill_endpoints(n, eu, ev)
    for mask in range(total):
        if __builtin_popcountll(mask) < minimum:
            continue
        for i in range(n):
            adj[i] = 0
        work = mask
        while work:
            index = __builtin_ctzll(work)
            work &= work - 1
            adj[eu[index]] |= <uint64_t>1 << ev[index]
            adj[ev[index]] |= <uint64_t>1 << eu[index]
        if _alpha_for_adjacency(n, adj, counts):
            key = 0
            for i in range(n - 1):
                key = (key << 8) | <uint64_t>counts[i]  # entries < 256 for n <= 7
            keys.insert(key)
    found = set()
    cdef unordered_set[uint64_t].iterator it = keys.begin()
    cdef list values
    while it != keys.end():
        key = deref(it)
        values = [0] * (n - 1)
        for i in range(n - 2, -1, -1):
            values[i] = <int>(key & 0xFF)
            key >>= 8
        found.add(tuple(values))
        inc(it)
    return found
