# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free

ctypedef unsigned int mask_t


cdef mask_t* _pack(object seq, Py_ssize_t* length) except NULL:
    cdef Py_ssize_t k, size = len(seq)
    cdef mask_t* buf = <mask_t*> malloc((size if size > 0 else 1) * sizeof(mask_t))
    if buf == NULL:
        raise MemoryError()
    k = 0
    for item in seq:
        buf[k] = <mask_t> item
        k += 1
    length[0] = size
    return buf


cdef bint _is_topology(int n, mask_t* ms, Py_ssize_t count, unsigned char* present):
    cdef mask_t full = (1U << n) - 1
    cdef Py_ssize_t i, j
    cdef mask_t u, v
    for i in range(count):
        present[ms[i]] = 1
    if not present[0] or not present[full]:
        return False
    for i in range(count):
        u = ms[i]
        for j in range(i + 1, count):
            v = ms[j]
            if not present[u | v] or not present[u & v]:
                return False
    return True


def is_topology(int n, members):
    cdef Py_ssize_t count
    cdef mask_t* ms = _pack(members, &count)
    cdef unsigned char* present = <unsigned char*> calloc(1U << n, 1)
    cdef bint ok
    if present == NULL:
        free(ms)
        raise MemoryError()
    ok = _is_topology(n, ms, count, present)
    free(ms)
    free(present)
    return ok


def enumerate_topologies(int n):
    cdef unsigned int size = 1U << n
    cdef mask_t full = size - 1
    cdef unsigned long long fam, total = 1ULL << size
    cdef unsigned long long need = 1ULL | (1ULL << full)
    cdef mask_t ms[16]
    cdef unsigned char present[16]
    cdef Py_ssize_t count
    cdef unsigned int k
    if n > 4:
        raise ValueError("compiled enumeration supports n <= 4")
    found = []
    fam = 0
    while fam < total:
        if fam & need == need:
            count = 0
            for k in range(size):
                present[k] = 0
                if (fam >> k) & 1ULL:
                    ms[count] = k
                    count += 1
            if _is_topology(n, ms, count, present):
                found.append(fam)
        fam += 1
    return found


def interior_table(int n, opens):
    cdef Py_ssize_t count, i
    cdef mask_t* us = _pack(opens, &count)
    cdef mask_t a, acc
    out = []
    for a in range(1U << n):
        acc = 0
        for i in range(count):
            if us[i] & ~a == 0:
                acc |= us[i]
        out.append(acc)
    free(us)
    return out


def closure_table(int n, opens):
    cdef Py_ssize_t count, i
    cdef mask_t* us = _pack(opens, &count)
    cdef mask_t full = (1U << n) - 1
    cdef mask_t a, c, acc
    out = []
    for a in range(1U << n):
        acc = full
        for i in range(count):
            c = full ^ us[i]
            if a & ~c == 0:
                acc &= c
        out.append(acc)
    free(us)
    return out


def star_members(int n, img1, img2):
    cdef Py_ssize_t c1, c2
    cdef mask_t* t1 = _pack(img1, &c1)
    cdef mask_t* t2 = _pack(img2, &c2)
    cdef mask_t a
    out = []
    for a in range(1U << n):
        if a & ~(t1[a] | t2[a]) == 0:
            out.append(a)
    free(t1)
    free(t2)
    return out


def open_core_table(int n, members):
    cdef Py_ssize_t count, i
    cdef mask_t* us = _pack(members, &count)
    cdef mask_t a, acc
    out = []
    for a in range(1U << n):
        acc = 0
        for i in range(count):
            if us[i] & ~a == 0:
                acc |= us[i]
        out.append(acc)
    free(us)
    return out


def avoid_closure_table(int n, members):
    cdef Py_ssize_t count, i
    cdef mask_t* us = _pack(members, &count)
    cdef mask_t full = (1U << n) - 1
    cdef mask_t b, acc
    out = []
    for b in range(1U << n):
        acc = 0
        for i in range(count):
            if us[i] & b == 0:
                acc |= us[i]
        out.append(full ^ acc)
    free(us)
    return out


def is_monotone(int n, img):
    cdef Py_ssize_t count
    cdef mask_t* t = _pack(img, &count)
    cdef mask_t a, bit
    cdef int i
    cdef bint ok = True
    for a in range(1U << n):
        for i in range(n):
            bit = 1U << i
            if not a & bit and t[a] & ~t[a | bit]:
                ok = False
                break
        if not ok:
            break
    free(t)
    return ok


def distributes(int n, img, opens):
    cdef Py_ssize_t count, oc, i
    cdef mask_t* t = _pack(img, &count)
    cdef mask_t* us = _pack(opens, &oc)
    cdef mask_t w, b
    cdef bint ok = True
    for i in range(oc):
        w = us[i]
        for b in range(1U << n):
            if t[w & b] != (t[w] & t[b]):
                ok = False
                break
        if not ok:
            break
    free(t)
    free(us)
    return ok


def preserves_unions(int n, img):
    cdef Py_ssize_t count
    cdef mask_t* t = _pack(img, &count)
    cdef mask_t size = 1U << n
    cdef mask_t a, b
    cdef bint ok = True
    for a in range(size):
        for b in range(a + 1, size):
            if t[a | b] != (t[a] | t[b]):
                ok = False
                break
        if not ok:
            break
    free(t)
    return ok


def preimage_table(images, int m):
    cdef Py_ssize_t count, x
    cdef mask_t* f = _pack(images, &count)
    cdef mask_t b, acc
    out = []
    for b in range(1U << m):
        acc = 0
        for x in range(count):
            if (b >> f[x]) & 1U:
                acc |= 1U << x
        out.append(acc)
    free(f)
    return out


def union_closure(int n, members):
    cdef Py_ssize_t count, i
    cdef mask_t* us = _pack(members, &count)
    cdef unsigned int size = 1U << n
    cdef unsigned char* present = <unsigned char*> calloc(size, 1)
    cdef mask_t* stack = <mask_t*> malloc(size * sizeof(mask_t))
    cdef Py_ssize_t top, cur, j
    cdef mask_t u, s
    if present == NULL or stack == NULL:
        free(us)
        free(present)
        free(stack)
        raise MemoryError()
    present[0] = 1
    stack[0] = 0
    top = 1
    for i in range(count):
        u = us[i]
        cur = top
        for j in range(cur):
            s = stack[j] | u
            if not present[s]:
                present[s] = 1
                stack[top] = s
                top += 1
    out = [k for k in range(size) if present[k]]
    free(us)
    free(present)
    free(stack)
    return out
