# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for byte-encoded words (letters 1..255)."""


def run_lengths(const unsigned char[::1] word):
    """Lengths of the maximal single-letter blocks of ``word``, in order."""
    cdef Py_ssize_t n = word.shape[0]
    cdef Py_ssize_t i = 0, j
    cdef list out = []
    while i < n:
        j = i + 1
        while j < n and word[j] == word[i]:
            j += 1
        out.append(j - i)
        i = j
    return out


def expand_runs(counts, int alpha, int beta):
    """Concatenate runs alpha^counts[0] beta^counts[1] alpha^counts[2] ..."""
    cdef Py_ssize_t total = 0, k, pos, c
    cdef unsigned char ca = <unsigned char> alpha
    cdef unsigned char cb = <unsigned char> beta
    cdef const unsigned char[::1] bcounts
    cdef unsigned char[::1] mv
    cdef Py_ssize_t ncounts
    if isinstance(counts, (bytes, bytearray)):
        bcounts = counts
        ncounts = bcounts.shape[0]
        for k in range(ncounts):
            total += bcounts[k]
        out = bytearray(total)
        mv = out
        pos = 0
        for k in range(ncounts):
            c = bcounts[k]
            if k % 2 == 0:
                while c > 0:
                    mv[pos] = ca
                    pos += 1
                    c -= 1
            else:
                while c > 0:
                    mv[pos] = cb
                    pos += 1
                    c -= 1
        return bytes(out)
    clist = [int(x) for x in counts]
    for k in range(len(clist)):
        total += <Py_ssize_t> clist[k]
    out = bytearray(total)
    mv = out
    pos = 0
    for k in range(len(clist)):
        c = <Py_ssize_t> clist[k]
        if k % 2 == 0:
            while c > 0:
                mv[pos] = ca
                pos += 1
                c -= 1
        else:
            while c > 0:
                mv[pos] = cb
                pos += 1
                c -= 1
    return bytes(out)


def kolakoski_extend(buf, Py_ssize_t runs_read, Py_ssize_t n, int first, int second):
    """Grow the self-reading fixed-point buffer to at least ``n`` letters."""
    cdef bytearray b = buf
    cdef int letter, cnt
    # run letters and run lengths both come from {first, second}
    cdef bytes p_ff = bytes([first]) * first
    cdef bytes p_fs = bytes([first]) * second
    cdef bytes p_sf = bytes([second]) * first
    cdef bytes p_ss = bytes([second]) * second
    while len(b) < n:
        letter = first if runs_read % 2 == 0 else second
        cnt = b[runs_read] if runs_read < len(b) else letter
        if letter == first:
            b += p_ff if cnt == first else p_fs
        else:
            b += p_sf if cnt == first else p_ss
        runs_read += 1
    return runs_read


def first_violation(word, Py_ssize_t n):
    """First suffix of ``word[:n]`` decidably smaller than the word itself."""
    cdef bytes data = bytes(word)
    cdef const unsigned char[::1] w = data
    if n > w.shape[0]:
        n = w.shape[0]
    cdef Py_ssize_t i, j, m
    for i in range(1, n):
        m = n - i
        j = 0
        while j < m and w[i + j] == w[j]:
            j += 1
        if j < m and w[i + j] < w[j]:
            return (i, j + 1)
    return None
