# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in ``_kernels_py``.

Same signatures and same outputs; see the pure-Python module for the
semantics.  Only the inner loops live here.
"""

from libc.stdlib cimport malloc, free


def canonical_code(sigma, alpha, root, data=None):
    cdef Py_ssize_t n = len(sigma)
    cdef int *sig = <int *> malloc(n * sizeof(int))
    cdef int *alp = <int *> malloc(n * sizeof(int))
    cdef int *label = <int *> malloc(n * sizeof(int))
    cdef int *order = <int *> malloc(n * sizeof(int))
    cdef Py_ssize_t i, k, cnt
    cdef int d, x
    if not sig or not alp or not label or not order:
        free(sig); free(alp); free(label); free(order)
        raise MemoryError()
    try:
        for i in range(n):
            sig[i] = sigma[i]
            alp[i] = alpha[i]
            label[i] = -1
        order[0] = root
        label[root] = 0
        cnt = 1
        k = 0
        while k < cnt:
            d = order[k]
            x = sig[d]
            if label[x] < 0:
                label[x] = cnt
                order[cnt] = x
                cnt += 1
            x = alp[d]
            if label[x] < 0:
                label[x] = cnt
                order[cnt] = x
                cnt += 1
            k += 1
        if cnt != n:
            return None
        out = []
        if data is None:
            for k in range(n):
                d = order[k]
                out.append(label[sig[d]])
                out.append(label[alp[d]])
        else:
            for k in range(n):
                d = order[k]
                out.append(label[sig[d]])
                out.append(label[alp[d]])
                out.append(data[d])
        return tuple(out)
    finally:
        free(sig); free(alp); free(label); free(order)


def count_cycles(perm):
    cdef Py_ssize_t n = len(perm)
    cdef int *p = <int *> malloc(n * sizeof(int))
    cdef char *seen = <char *> malloc(n * sizeof(char))
    cdef Py_ssize_t s
    cdef int x, c = 0
    try:
        for s in range(n):
            p[s] = perm[s]
            seen[s] = 0
        for s in range(n):
            if not seen[s]:
                c += 1
                x = <int> s
                while not seen[x]:
                    seen[x] = 1
                    x = p[x]
        return c
    finally:
        free(p); free(seen)


cdef struct GenState:
    int n
    int n_edges
    int genus
    int maxdeg
    int *sigma
    int *alpha
    char *has_pre
    char *allowed      # allowed[L] != 0 iff face degree L allowed; NULL = all
    char *seen


cdef int _face_ok(GenState *st, int d):
    cdef int length = 1
    cdef int x = d
    cdef int a, y
    while True:
        a = st.alpha[x]
        if a < 0:
            return 1
        y = st.sigma[a]
        if y < 0:
            return 1
        if y == d:
            if length > st.maxdeg:
                return 0
            return st.allowed[length] != 0
        length += 1
        if length > st.maxdeg:
            return 0
        x = y


cdef int _leaf_ok(GenState *st):
    cdef int n = st.n
    cdef int s, x, v = 0, f = 0, length
    for s in range(n):
        st.seen[s] = 0
    for s in range(n):
        if not st.seen[s]:
            v += 1
            x = s
            while not st.seen[x]:
                st.seen[x] = 1
                x = st.sigma[x]
    for s in range(n):
        st.seen[s] = 0
    for s in range(n):
        if not st.seen[s]:
            f += 1
            length = 0
            x = s
            while not st.seen[x]:
                st.seen[x] = 1
                length += 1
                x = st.sigma[st.alpha[x]]
            if st.allowed != NULL:
                if length > st.maxdeg or not st.allowed[length]:
                    return 0
    if st.genus >= 0 and 2 - v + st.n_edges - f != 2 * st.genus:
        return 0
    return 1


cdef object _emit(GenState *st):
    cdef int i
    sig = tuple([st.sigma[i] for i in range(st.n)])
    alp = tuple([st.alpha[i] for i in range(st.n)])
    return (sig, alp)


cdef void _rec(GenState *st, int i, int nlab, list out):
    cdef int j, nl
    if i == nlab:
        if nlab == st.n and _leaf_ok(st):
            out.append(_emit(st))
        return
    for j in range(nlab + 1):
        if j == nlab:
            if nlab >= st.n:
                break
            nl = nlab + 1
        else:
            if st.has_pre[j]:
                continue
            nl = nlab
        st.sigma[i] = j
        st.has_pre[j] = 1
        if st.allowed == NULL or st.alpha[i] < 0 or _face_ok(st, st.alpha[i]):
            _rec_alpha(st, i, nl, out)
        st.has_pre[j] = 0
        st.sigma[i] = -1


cdef void _rec_alpha(GenState *st, int i, int nlab, list out):
    cdef int j, nl
    if st.alpha[i] >= 0:
        _rec(st, i + 1, nlab, out)
        return
    for j in range(i + 1, nlab + 1):
        if j == nlab:
            if nlab >= st.n:
                break
            nl = nlab + 1
        else:
            if st.alpha[j] >= 0:
                continue
            nl = nlab
        st.alpha[i] = j
        st.alpha[j] = i
        if st.allowed == NULL or (_face_ok(st, i) and _face_ok(st, j)):
            _rec(st, i + 1, nl, out)
        st.alpha[i] = -1
        st.alpha[j] = -1


def rooted_maps(int n_edges, int genus=-1, face_degrees=None):
    cdef GenState st
    cdef int n = 2 * n_edges
    cdef int i
    cdef list out = []
    if n == 0:
        return out
    st.n = n
    st.n_edges = n_edges
    st.genus = genus
    st.sigma = <int *> malloc(n * sizeof(int))
    st.alpha = <int *> malloc(n * sizeof(int))
    st.has_pre = <char *> malloc(n * sizeof(char))
    st.seen = <char *> malloc(n * sizeof(char))
    st.allowed = NULL
    try:
        for i in range(n):
            st.sigma[i] = -1
            st.alpha[i] = -1
            st.has_pre[i] = 0
        if face_degrees:
            st.maxdeg = max(face_degrees)
            st.allowed = <char *> malloc((st.maxdeg + 1) * sizeof(char))
            for i in range(st.maxdeg + 1):
                st.allowed[i] = 1 if i in face_degrees else 0
        else:
            st.maxdeg = n + 1
        _rec(&st, 0, 1, out)
        return out
    finally:
        free(st.sigma); free(st.alpha); free(st.has_pre); free(st.seen)
        if st.allowed != NULL:
            free(st.allowed)
