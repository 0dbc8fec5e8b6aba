# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled oracle kernels; same contract as ncfkit._kernels.pure.

Word maxima break ties toward the smallest row index, block lists come out
ordered by size then lexicographically by index set, and packing returns
the lexicographically first maximum family.  Any behavioral difference from
the pure backend is a bug (tests compare the two directly).
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "compiled"


cdef inline int popcount(unsigned int x):
    x = x - ((x >> 1) & 0x55555555u)
    x = (x & 0x33333333u) + ((x >> 2) & 0x33333333u)
    x = (x + (x >> 4)) & 0x0F0F0F0Fu
    return <int>((x * 0x01010101u) >> 24)


def sensitivity_at(const unsigned char[::1] values, int n, int word):
    cdef int i, count = 0
    cdef unsigned char fx = values[word]
    for i in range(n):
        if values[word ^ (1 << i)] != fx:
            count += 1
    return count


def sensitivity_max(const unsigned char[::1] values, int n):
    cdef Py_ssize_t word, size = values.shape[0]
    cdef int i, count, best = -1
    cdef Py_ssize_t best_word = 0
    cdef unsigned char fx
    for word in range(size):
        fx = values[word]
        count = 0
        for i in range(n):
            if values[word ^ (1 << i)] != fx:
                count += 1
        if count > best:
            best = count
            best_word = word
    return best, best_word


def sensitivity_sum(const unsigned char[::1] values, int n):
    cdef Py_ssize_t word, size = values.shape[0]
    cdef long long total = 0
    cdef int i
    cdef unsigned char fx
    for word in range(size):
        fx = values[word]
        for i in range(n):
            if values[word ^ (1 << i)] != fx:
                total += 1
    return total


cdef int _block_capacity(int n):
    # minimal blocks form an antichain, so C(n, n//2) bounds their number
    cdef long long num = 1
    cdef int i, k = n // 2
    for i in range(k):
        num = num * (n - i) // (i + 1)
    return <int>num


cdef int _minimal_blocks_c(const unsigned char[::1] values, int n, int word,
                           int max_size, int* out):
    """Fill ``out`` with minimal sensitive blocks in (size, lex) order."""
    cdef unsigned char fx = values[word]
    cdef int count = 0
    cdef int size, i, j, mask, ok
    cdef int c[32]
    for size in range(1, max_size + 1):
        # lexicographic size-subsets of {0..n-1} via an index array
        if size > n:
            break
        for i in range(size):
            c[i] = i
        while True:
            mask = 0
            for i in range(size):
                mask |= 1 << c[i]
            if values[word ^ mask] != fx:
                ok = 1
                for j in range(count):
                    if out[j] & mask == out[j]:
                        ok = 0
                        break
                if ok:
                    out[count] = mask
                    count += 1
            i = size - 1
            while i >= 0 and c[i] == n - size + i:
                i -= 1
            if i < 0:
                break
            c[i] += 1
            for j in range(i + 1, size):
                c[j] = c[j - 1] + 1
    return count


cdef struct PackState:
    int* blocks
    int* sizes
    int nb
    int n
    int best
    int* sel
    int* best_sel


cdef void _pack_dfs(PackState* st, int start, unsigned int used, int count):
    cdef int idx, b, free_bits, cap
    if count > st.best:
        st.best = count
        for idx in range(count):
            st.best_sel[idx] = st.sel[idx]
    if start >= st.nb:
        return
    free_bits = st.n - popcount(used)
    if free_bits == 0:
        return
    cap = st.nb - start
    if free_bits // st.sizes[start] < cap:
        cap = free_bits // st.sizes[start]
    if count + cap <= st.best:
        return
    for idx in range(start, st.nb):
        b = st.blocks[idx]
        if b & used:
            continue
        st.sel[count] = b
        _pack_dfs(st, idx + 1, used | <unsigned int>b, count + 1)


cdef int _pack_c(int* blocks, int nb, int n, int* best_sel):
    cdef PackState st
    cdef int i
    if nb == 0:
        return 0
    st.blocks = blocks
    st.nb = nb
    st.n = n
    st.best = 0
    st.best_sel = best_sel
    st.sizes = <int*>malloc(nb * sizeof(int))
    st.sel = <int*>malloc((n + 1) * sizeof(int))
    if st.sizes == NULL or st.sel == NULL:
        free(st.sizes)
        free(st.sel)
        raise MemoryError()
    try:
        for i in range(nb):
            st.sizes[i] = popcount(<unsigned int>blocks[i])
        _pack_dfs(&st, 0, 0, 0)
        return st.best
    finally:
        free(st.sizes)
        free(st.sel)


def minimal_blocks(const unsigned char[::1] values, int n, int word,
                   int max_size):
    cdef int capacity = _block_capacity(n)
    cdef int* out = <int*>malloc(capacity * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef int i, count
    try:
        count = _minimal_blocks_c(values, n, word, max_size, out)
        return [out[i] for i in range(count)]
    finally:
        free(out)


def pack_max_disjoint(blocks, int n):
    cdef int nb = len(blocks)
    if nb == 0:
        return 0, []
    cdef int* cblocks = <int*>malloc(nb * sizeof(int))
    cdef int* best_sel = <int*>malloc((n + 1) * sizeof(int))
    if cblocks == NULL or best_sel == NULL:
        free(cblocks)
        free(best_sel)
        raise MemoryError()
    cdef int i, best
    try:
        for i in range(nb):
            cblocks[i] = blocks[i]
        best = _pack_c(cblocks, nb, n, best_sel)
        return best, [best_sel[i] for i in range(best)]
    finally:
        free(cblocks)
        free(best_sel)


def block_at(const unsigned char[::1] values, int n, int word, int max_size):
    cdef int capacity = _block_capacity(n)
    cdef int* out = <int*>malloc(capacity * sizeof(int))
    cdef int* best_sel = <int*>malloc((n + 1) * sizeof(int))
    if out == NULL or best_sel == NULL:
        free(out)
        free(best_sel)
        raise MemoryError()
    cdef int count, best, i
    try:
        count = _minimal_blocks_c(values, n, word, max_size, out)
        best = _pack_c(out, count, n, best_sel)
        return best, [best_sel[i] for i in range(best)]
    finally:
        free(out)
        free(best_sel)


def block_max(const unsigned char[::1] values, int n, int max_size):
    cdef Py_ssize_t word, size = values.shape[0]
    cdef int capacity = _block_capacity(n)
    cdef int* out = <int*>malloc(capacity * sizeof(int))
    cdef int* best_sel = <int*>malloc((n + 1) * sizeof(int))
    cdef int* wit_sel = <int*>malloc((n + 1) * sizeof(int))
    if out == NULL or best_sel == NULL or wit_sel == NULL:
        free(out)
        free(best_sel)
        free(wit_sel)
        raise MemoryError()
    cdef int count, got, i, best = 0
    cdef Py_ssize_t best_word = 0
    try:
        for word in range(size):
            count = _minimal_blocks_c(values, n, <int>word, max_size, out)
            if count <= best:
                continue
            got = _pack_c(out, count, n, best_sel)
            if got > best:
                best = got
                best_word = word
                for i in range(got):
                    wit_sel[i] = best_sel[i]
        return best, best_word, [wit_sel[i] for i in range(best)]
    finally:
        free(out)
        free(best_sel)
        free(wit_sel)


def bs_profile(const unsigned char[::1] values, int n):
    cdef Py_ssize_t word, size = values.shape[0]
    cdef int capacity = _block_capacity(n)
    cdef int* blocks = <int*>malloc(capacity * sizeof(int))
    cdef int* pack_sel = <int*>malloc((n + 1) * sizeof(int))
    cdef int* cur_sel = <int*>malloc((n + 1) * sizeof(int))
    cdef int* wit_sel = <int*>malloc((n + 1) * sizeof(int))
    cdef int* max_l = <int*>malloc((n + 1) * sizeof(int))
    cdef int* boundary = <int*>malloc((n + 1) * sizeof(int))
    if (blocks == NULL or pack_sel == NULL or cur_sel == NULL
            or wit_sel == NULL or max_l == NULL or boundary == NULL):
        free(blocks)
        free(pack_sel)
        free(cur_sel)
        free(wit_sel)
        free(max_l)
        free(boundary)
        raise MemoryError()
    cdef int count, idx, l, bd, prev_bd, cur, i, wit_count = 0
    cdef Py_ssize_t wit_word = 0
    try:
        for l in range(n + 1):
            max_l[l] = 0
        for word in range(size):
            count = _minimal_blocks_c(values, n, <int>word, n, blocks)
            if count == 0:
                continue
            idx = 0
            for l in range(1, n + 1):
                while idx < count and popcount(<unsigned int>blocks[idx]) <= l:
                    idx += 1
                boundary[l] = idx
            cur = 0
            prev_bd = 0
            for l in range(1, n + 1):
                bd = boundary[l]
                if bd > prev_bd and bd > cur:
                    cur = _pack_c(blocks, bd, n, pack_sel)
                    for i in range(cur):
                        cur_sel[i] = pack_sel[i]
                prev_bd = bd
                if cur > max_l[l]:
                    max_l[l] = cur
                    if l == n:
                        wit_word = word
                        wit_count = cur
                        for i in range(cur):
                            wit_sel[i] = cur_sel[i]
        return ([max_l[l] for l in range(1, n + 1)], wit_word,
                [wit_sel[i] for i in range(wit_count)])
    finally:
        free(blocks)
        free(pack_sel)
        free(cur_sel)
        free(wit_sel)
        free(max_l)
        free(boundary)
