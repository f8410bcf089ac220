import math

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQ = (3 - math.sqrt(5)) / 2


def golden_min(f, lo, hi, tol=1e-10, max_iter=200):
    """Golden-section search for a minimum of ``f`` on ``[lo, hi]``.

    Assumes ``f`` is unimodal on the bracket.  Returns ``(x, f(x))`` for the
    best point evaluated, endpoints included.
    """
    lo, hi = min(lo, hi), max(lo, hi)
    best_x, best_f = lo, f(lo)
    f_hi = f(hi)
    if f_hi < best_f:
        best_x, best_f = hi, f_hi
    h = hi - lo
    if h <= tol:
        return best_x, best_f

    c = lo + INV_PHI_SQ * h
    d = lo + INV_PHI * h
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if h <= tol:
            break
        if fc < fd:
            hi, d, fd = d, c, fc
            h = INV_PHI * h
            c = lo + INV_PHI_SQ * h
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            h = INV_PHI * h
            d = lo + INV_PHI * h
            fd = f(d)
    for x, fx in ((c, fc), (d, fd)):
        if fx < best_f:
            best_x, best_f = x, fx
    return best_x, best_f
