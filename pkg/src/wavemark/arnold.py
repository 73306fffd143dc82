"""Arnold cat-map scrambling for square bit matrices.

One step sends the cell at column x, row y of an n x n matrix to column
(x + y) mod n, row (x + 2y) mod n. The map is a bijection with a finite
period P(n), so descrambling t steps is just scrambling P - (t mod P)
more steps.
"""

import numpy as np

# the step as a 2x2 integer matrix acting on (x, y) column vectors
_A = (1, 1, 1, 2)


def _check_square(m):
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix")
    return arr


def _mat_pow_mod(t, n):
    """(a, b, c, d) of [[1,1],[1,2]]**t reduced mod n, by square and multiply."""
    ra, rb, rc, rd = 1 % n, 0, 0, 1 % n
    ba, bb, bc, bd = (v % n for v in _A)
    while t:
        if t & 1:
            ra, rb, rc, rd = (
                (ra * ba + rb * bc) % n,
                (ra * bb + rb * bd) % n,
                (rc * ba + rd * bc) % n,
                (rc * bb + rd * bd) % n,
            )
        ba, bb, bc, bd = (
            (ba * ba + bb * bc) % n,
            (ba * bb + bb * bd) % n,
            (bc * ba + bd * bc) % n,
            (bc * bb + bd * bd) % n,
        )
        t >>= 1
    return ra, rb, rc, rd


def arnold_step(m):
    """Apply one cat-map step to a square matrix."""
    arr = _check_square(m)
    n = arr.shape[0]
    out = np.empty_like(arr)
    rows, cols = np.indices((n, n))
    out[(cols + 2 * rows) % n, (cols + rows) % n] = arr[rows, cols]
    return out


def arnold_iterate(m, t):
    """Apply t cat-map steps at once via the t-th matrix power mod n."""
    arr = _check_square(m)
    if t < 0:
        raise ValueError("iteration count must be >= 0")
    n = arr.shape[0]
    if n == 1 or t == 0:
        return arr.copy()
    a, b, c, d = _mat_pow_mod(t, n)
    rows, cols = np.indices((n, n))
    new_cols = (a * cols + b * rows) % n
    new_rows = (c * cols + d * rows) % n
    out = np.empty_like(arr)
    out[new_rows, new_cols] = arr[rows, cols]
    return out


def arnold_period(n):
    """Smallest P >= 1 with [[1,1],[1,2]]**P = identity mod n."""
    if n < 1:
        raise ValueError("side length must be >= 1")
    if n == 1:
        return 1
    a, b, c, d = _A
    ca, cb, cc, cd = (v % n for v in _A)
    period = 1
    while (ca, cb, cc, cd) != (1, 0, 0, 1):
        ca, cb, cc, cd = (
            (ca * a + cb * c) % n,
            (ca * b + cb * d) % n,
            (cc * a + cd * c) % n,
            (cc * b + cd * d) % n,
        )
        period += 1
        if period > 3 * n:  # Dyson-Falk bound: the period never exceeds 3n
            raise RuntimeError(f"no closure within 3n steps for n={n}")
    return period


def arnold_point_period(n, point=(1, 1)):
    """Orbit length of a single cell under the map, a quick diagnostic.

    This is the classic single-point period check. It divides the full
    matrix period but can be shorter, so descrambling never relies on it.
    """
    if n < 1:
        raise ValueError("side length must be >= 1")
    x0, y0 = point[0] % n, point[1] % n
    x, y = (x0 + y0) % n, (x0 + 2 * y0) % n
    steps = 1
    while (x, y) != (x0, y0):
        x, y = (x + y) % n, (x + 2 * y) % n
        steps += 1
    return steps


def arnold_unscramble(m, t):
    """Undo arnold_iterate(m, t) by completing the cycle."""
    arr = _check_square(m)
    if t < 0:
        raise ValueError("iteration count must be >= 0")
    period = arnold_period(arr.shape[0])
    return arnold_iterate(arr, period - (t % period))
