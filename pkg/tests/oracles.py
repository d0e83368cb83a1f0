"""Independent reference computations used to freeze expected values.

None of these call into the library's merge/update code paths; they work
from first principles (unit-credence expansion, world enumeration, closed
forms) in exact rational arithmetic where possible.
"""

from fractions import Fraction
from math import prod, sqrt


def unit_expansion_merge(evidences):
    """Straight merger by expanding rational credences r/s into equal units.

    Each ``[r_i/s_i; p_i]`` becomes ``r_i * prod_{j != i} s_j`` copies of a
    unit-credence evidence ``[1/prod s; p_i]``. Equi-credible evidences merge
    to ``[n kappa; mean p]``. Copies are counted rather than listed.

    ``evidences``: list of ``(r, s, p)`` with integers r, s and p a
    Fraction/float. Returns ``(credence, p)`` as Fractions.
    """
    big_s = prod(s for _, s, _ in evidences)
    unit = Fraction(1, big_s)
    copies = [r * (big_s // s) for r, s, _ in evidences]
    n = sum(copies)
    mean = sum(c * Fraction(p) for c, (_, _, p) in zip(copies, evidences)) / n
    return n * unit, mean


def correlation_by_worlds(p_a, p_ab, p_b):
    """rho(A, B) as covariance / (std std) of the indicator variables over four worlds."""
    p_a, p_ab, p_b = Fraction(p_a), Fraction(p_ab), Fraction(p_b)
    worlds = {
        (1, 1): p_ab,
        (1, 0): p_a - p_ab,
        (0, 1): p_b - p_ab,
        (0, 0): 1 - p_a - p_b + p_ab,
    }
    ex = sum(w * x for (x, _), w in worlds.items())
    ey = sum(w * y for (_, y), w in worlds.items())
    cov = sum(w * (x - ex) * (y - ey) for (x, y), w in worlds.items())
    vx = sum(w * (x - ex) ** 2 for (x, _), w in worlds.items())
    vy = sum(w * (y - ey) ** 2 for (_, y), w in worlds.items())
    if vx == 0 or vy == 0:
        return 0.0
    rho_sq = cov * cov / (vx * vy)
    return (1.0 if cov >= 0 else -1.0) * sqrt(float(rho_sq))


def weighted_std_two(k1, p1, k2, p2):
    """Two-evidence accord via the pairwise closed form ``1 - 2|dp| sqrt(k1 k2)/(k1+k2)``."""
    return 1.0 - 2.0 * abs(p1 - p2) * sqrt(k1 * k2) / (k1 + k2)


def jeffrey_direct(cells, new_b):
    """Law-of-total-probability mixture with exact arithmetic."""
    top = [Fraction(x) for x in cells[0]]
    bottom = [Fraction(x) for x in cells[1]]
    out = Fraction(0)
    for w, a, c in zip(new_b, top, bottom):
        if w:
            out += Fraction(w) * a / (a + c)
    return out


def repaired_table_closed_form(a, b, c, d, k, kt):
    """Closed-form posterior table of a binary constraint on column B, exact."""
    a, b, c, d, k, kt = map(Fraction, (a, b, c, d, k, kt))
    k1 = k + kt
    return ((((k + kt) * a + kt * b) / k1, k * b / k1), ((k + kt) * c / k1, (k + kt) * d / k1)), k1


def dutch_book_cash_flows(p_b, b, r):
    """Outcome-wise punter losses by explicit cash-flow bookkeeping.

    At t0 the punter buys three bets at their fair prices. If B fails, bet (b)
    pays b and the others expire. If B holds, bet (c) pays delta and bet (a)
    is sold back at 1 - r.
    """
    p_b, b, r = map(Fraction, (p_b, b, r))
    delta = b - (1 - r)
    price_a = p_b * b
    price_b = (1 - p_b) * b
    price_c = p_b * delta
    paid = price_a + price_b + price_c
    loss_not_b = paid - b
    loss_b = paid - delta - (1 - r)
    return loss_not_b, loss_b, delta


def all_parenthesizations(items, combine):
    """Every binary bracketing of ``items`` in the given order."""
    if len(items) == 1:
        return [items[0]]
    out = []
    for cut in range(1, len(items)):
        for left in all_parenthesizations(items[:cut], combine):
            for right in all_parenthesizations(items[cut:], combine):
                out.append(combine(left, right))
    return out
