"""Pure-Python kernels.

Reference implementations of the hot loops. The compiled module in
``_ck.pyx`` mirrors these signatures for byte-encoded words; these versions
additionally accept arbitrary integer sequences (letters above 255 never
reach the compiled path).
"""

from itertools import groupby


def run_lengths(word):
    """Lengths of the maximal single-letter blocks of ``word``, in order."""
    return [sum(1 for _ in group) for _, group in groupby(word)]


def expand_runs(counts, alpha, beta):
    """Concatenate runs alpha^counts[0] beta^counts[1] alpha^counts[2] ...

    Returns ``bytes`` when both letters fit in a byte, else a tuple of ints.
    ``beta`` is only consulted when there are at least two runs.
    """
    if 0 < alpha < 256 and 0 < beta < 256:
        first = bytes([alpha])
        second = bytes([beta])
        return b"".join(
            (first if i % 2 == 0 else second) * c for i, c in enumerate(counts)
        )
    out = []
    for i, c in enumerate(counts):
        out.extend((alpha if i % 2 == 0 else beta,) * c)
    return tuple(out)


def kolakoski_extend(buf, runs_read, n, first, second):
    """Grow the self-reading fixed-point buffer to at least ``n`` letters.

    ``buf`` is a mutable sequence (bytearray or list) holding the prefix
    generated so far; ``runs_read`` is the index of the next run to read.
    Returns the updated run index. Run ``j`` consists of copies of ``first``
    for even ``j`` and ``second`` for odd ``j``; its length is ``buf[j]``,
    which for ``j == len(buf)`` is the letter about to be written.
    """
    if isinstance(buf, bytearray):
        pieces = {
            (letter, cnt): bytes([letter]) * cnt
            for letter in (first, second)
            for cnt in (first, second)
        }
        while len(buf) < n:
            letter = first if runs_read % 2 == 0 else second
            cnt = buf[runs_read] if runs_read < len(buf) else letter
            buf += pieces[(letter, cnt)]
            runs_read += 1
        return runs_read
    while len(buf) < n:
        letter = first if runs_read % 2 == 0 else second
        cnt = buf[runs_read] if runs_read < len(buf) else letter
        buf.extend([letter] * cnt)
        runs_read += 1
    return runs_read


def first_violation(word, n):
    """First suffix of ``word[:n]`` decidably smaller than the word itself.

    Compares each suffix ``word[i:n]`` against the prefix of equal length and
    returns ``(i, decided_at)`` for the smallest violating ``i``, where
    ``decided_at`` counts the letters examined. Suffixes that match the
    prefix for all available letters are undecided and do not violate.
    Returns ``None`` when no violation is decidable within ``n`` letters.
    """
    n = min(n, len(word))
    if isinstance(word, (bytes, bytearray)):
        view = memoryview(bytes(word[:n]))
        for i in range(1, n):
            m = n - i
            j = 0
            chunk = 32
            while j < m:
                step = min(chunk, m - j)
                if view[i + j : i + j + step] == view[j : j + step]:
                    j += step
                    chunk = min(chunk * 2, 1 << 16)
                    continue
                while view[i + j] == view[j]:
                    j += 1
                break
            if j < m and view[i + j] < view[j]:
                return (i, j + 1)
        return None
    for i in range(1, n):
        m = n - i
        j = 0
        while j < m and word[i + j] == word[j]:
            j += 1
        if j < m and word[i + j] < word[j]:
            return (i, j + 1)
    return None
