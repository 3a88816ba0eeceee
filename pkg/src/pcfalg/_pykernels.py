"""Pure-Python word kernels.  They accept any exact ring elements."""


def reduce_word(seq):
    """Remove interior zeros with a single left-to-right stack pass."""
    st = []
    for c in seq:
        if len(st) >= 2 and st[-1] == 0:
            st.pop()
            x = st.pop()
            st.append(x + c)
        else:
            st.append(c)
    return st


def fold_word(seq):
    """Entries (m11, m12, m21, m22) of D(c1)...D(cn)."""
    a, b, c, d = 1, 0, 0, 1
    for x in seq:
        a, b, c, d = a * x + b, a, c * x + d, c
    return a, b, c, d


def prefix_columns(seq):
    """First columns (p_k, q_k) of the prefix products, k = 1..n."""
    out = []
    p, pp, q, qq = 1, 0, 0, 1
    for x in seq:
        p, pp = p * x + pp, p
        q, qq = q * x + qq, q
        out.append((p, q))
    return out


def rotation_mats(seq):
    """Products M(rotation starting at a_{j+1}) for j = 1..k.

    Uses R_j = D(a_j)^{-1} R_{j-1} D(a_j) with D(a)^{-1} = [[0,1],[1,-a]].
    """
    r, s, t, u = fold_word(seq)
    out = []
    for a in seq:
        # D(a)^{-1} R = [[t, u], [r - a t, s - a u]]
        r2, s2, t2, u2 = t, u, r - a * t, s - a * u
        # (...) D(a) = [[x a + y, x], ...]
        r, s, t, u = r2 * a + s2, r2, t2 * a + u2, t2
        out.append((r, s, t, u))
    return out
