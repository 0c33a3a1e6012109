"""Pure-Python term kernels: the inner loops behind all polynomial arithmetic.

A polynomial is stored as a dict mapping a *packed key* to a nonzero integer
coefficient.  The key packs the whole exponent vector of a monomial
z1^e1 * ... * zk^ek * q^eq into one integer:

    key = e1 << (Q_BITS + (k-1)*Z_BITS) | e2 << (Q_BITS + (k-2)*Z_BITS)
          | ... | ek << Q_BITS | eq

Fields never overlap (the Poly layer enforces e_i < 2**Z_BITS and
eq < 2**Q_BITS before any arithmetic), so multiplying two monomials is a
single integer addition of their keys.  Comparing packed keys as integers is
plain lexicographic order on (e1, ..., ek, eq).

qfib._backend swaps in the compiled twin of this module (_kernels_cy) when it
is available; both implement exactly the same functions.
"""

Z_BITS = 16
Q_BITS = 32
Z_MASK = (1 << Z_BITS) - 1
Q_MASK = (1 << Q_BITS) - 1


def add_terms(a, b):
    """Merged sum of two term dicts, zero coefficients dropped."""
    if len(b) > len(a):
        a, b = b, a
    out = dict(a)
    for key, coeff in b.items():
        c = out.get(key, 0) + coeff
        if c:
            out[key] = c
        else:
            del out[key]
    return out


def sub_terms(a, b):
    out = dict(a)
    for key, coeff in b.items():
        c = out.get(key, 0) - coeff
        if c:
            out[key] = c
        else:
            del out[key]
    return out


def mul_terms(a, b):
    """Distributive product; key addition is exact because fields never carry."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ka, va in a.items():
        for kb, vb in b.items():
            key = ka + kb
            c = get(key, 0) + va * vb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def scalar_mul_terms(a, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {key: coeff * c for key, coeff in a.items()}


def shift_q_terms(a, shifts):
    """Apply z_i -> z_i * q^(e_i): each term's q field grows by sum(e_i * z_i).

    `shifts` is a tuple of (bit_offset, multiplier) pairs for the variables
    with nonzero multiplier.  Distinct keys stay distinct (the added amount is
    a function of the untouched z fields), so no merging is needed.
    """
    out = {}
    for key, coeff in a.items():
        delta = 0
        for off, mult in shifts:
            delta += ((key >> off) & Z_MASK) * mult
        out[key + delta] = coeff
    return out


def times_q_terms(a, e):
    """Multiply by q^e: every key's q field grows by e."""
    return {key + e: coeff for key, coeff in a.items()}


def eval_terms(a, zoffsets, zvals, qval):
    """Exact integer evaluation at z_i = zvals[i], q = qval."""
    total = 0
    for key, coeff in a.items():
        term = coeff
        eq = key & Q_MASK
        if eq:
            term *= qval**eq
        for off, v in zip(zoffsets, zvals):
            e = (key >> off) & Z_MASK
            if e:
                term *= v**e
        total += term
    return total


def sum_tilings_terms(n, maxpart, deltas):
    """Accumulate the weighted sum over all tilings of an n-board.

    deltas[i-1][sigma-1] is the packed key contribution of a tile of length i
    starting at position sigma: (1 << zshift_i) + q_exponent.  Because packed
    monomial products are key sums, the weight of a tiling is just the sum of
    its tiles' deltas, and every tiling contributes coefficient 1.
    """
    acc = {}
    if n < 0:
        return acc
    if n == 0:
        acc[0] = 1
        return acc
    stack = [(1, 0)]
    while stack:
        pos, key = stack.pop()
        rem = n - pos + 1
        top = maxpart if maxpart < rem else rem
        row = deltas
        for i in range(1, top + 1):
            nkey = key + row[i - 1][pos - 1]
            npos = pos + i
            if npos > n:
                acc[nkey] = acc.get(nkey, 0) + 1
            else:
                stack.append((npos, nkey))
    return acc
