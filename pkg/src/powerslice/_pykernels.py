"""Pure-Python hot loops.  Reference semantics for the compiled twins in
``_ckernels.pyx``; both must return identical results and visit counts."""


def intersect(s_small, s_large, k, x_stop, powers=None):
    """Two-pointer intersection of the value sequences of two slices.

    Both slices are walked from x = 0 (largest value) towards the centre.
    Only ``x <= x_stop`` is visited on the smaller slice.  Returns
    ``(matches, visited)`` where ``matches`` lists index pairs ``(x, y)``
    with equal values in traversal (descending value) order, and
    ``visited`` counts slice entries evaluated.
    """
    if x_stop < 0:
        return [], 0
    if powers is None:
        def f(s, x):
            return x**k + (s - x) ** k
    else:
        def f(s, x):
            return powers[x] + powers[s - x]
    n2 = s_large // 2
    i = j = 0
    a = f(s_small, 0)
    b = f(s_large, 0)
    visited = 2
    matches = []
    while True:
        if a == b:
            matches.append((i, j))
            i += 1
            j += 1
            if i > x_stop or j > n2:
                break
            a = f(s_small, i)
            b = f(s_large, j)
            visited += 2
        elif a > b:
            i += 1
            if i > x_stop:
                break
            a = f(s_small, i)
            visited += 1
        else:
            j += 1
            if j > n2:
                break
            b = f(s_large, j)
            visited += 1
    return matches, visited


def fermat_first_failure(k, n, limit):
    """First residue x < limit with x**k != x (mod n), or -1."""
    for x in range(limit):
        if pow(x, k, n) != x:
            return x
    return -1
