"""Pure-Python versions of the hot kernels.

Signatures match the compiled module ``_ckernels`` exactly; ``kernels``
picks one of the two at import time.
"""


def dt_cube_table(bits, n, order):
    """Optimal decision-tree sizes for every cube of an n-variable table.

    ``bits`` holds 2**n bytes (0 or 1).  Cubes are indexed in base 3 with
    digit j equal to 0, 1 or 2 (free) for variable j.  ``order`` lists the
    variables in tie-break preference.  Returns ``(size, best)`` where
    ``best[c]`` is the split variable of cube c, or -1 for a leaf.
    """
    total = 3 ** n
    pow3 = [3 ** j for j in range(n)]
    size = [0] * total
    best = [-1] * total
    const = [0] * total  # 0/1 constant value, 2 mixed
    for c in range(total):
        # decode digits
        rest = c
        point = 0
        stars = []
        for j in range(n):
            d = rest % 3
            rest //= 3
            if d == 2:
                stars.append(j)
            elif d == 1:
                point |= 1 << j
        if not stars:
            size[c] = 1
            const[c] = bits[point]
            continue
        j0 = stars[0]
        a = const[c - 2 * pow3[j0]]
        b = const[c - pow3[j0]]
        if a == b and a != 2:
            const[c] = a
            size[c] = 1
            continue
        const[c] = 2
        star_set = set(stars)
        best_size = -1
        best_var = -1
        for j in order:
            if j not in star_set:
                continue
            s = 1 + size[c - 2 * pow3[j]] + size[c - pow3[j]]
            if best_size < 0 or s < best_size:
                best_size = s
                best_var = j
        size[c] = best_size
        best[c] = best_var
    return size, best


def delta_vanishes(a, b, c, d, m):
    """True iff A*B == C*D as polynomials in m variables without x*x = x.

    Each argument lists the monomials (as m-bit subset masks) of a
    multilinear polynomial over GF(2).  A product monomial x^S * x^T is
    keyed by (S | T, S & T), which records exponents in {0, 1, 2}.
    """
    acc = set()
    for s in a:
        for t in b:
            key = (s | t) | ((s & t) << m)
            if key in acc:
                acc.remove(key)
            else:
                acc.add(key)
    for s in c:
        for t in d:
            key = (s | t) | ((s & t) << m)
            if key in acc:
                acc.remove(key)
            else:
                acc.add(key)
    return not acc
