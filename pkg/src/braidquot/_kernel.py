"""Compiled Todd-Coxeter core.

Cosets are 1-based here and 0 marks an undefined entry.  Column ``2k`` is
generator ``k+1`` and column ``2k+1`` its inverse, so ``x ^ 1`` is the
inverse column of ``x``.  The coincidence routine follows the usual
queue-of-dead-cosets scheme with a union-find ``parent`` array.
"""

import numpy as np
from numba import njit

COMPLETE = 0
CAPPED = 1
INCONSISTENT = 2

HLT = 0
FELSCH = 1

# slots of the int64 ``st`` state vector
N_ALLOC = 0
N_LIVE = 1
PEAK = 2
DEFINED = 3
DTOP = 4
DOVERFLOW = 5
BAD = 6
MERGES = 7
NSTATE = 8


@njit(cache=True)
def _rep(parent, c):
    r = c
    while parent[r] != r:
        r = parent[r]
    while parent[c] != r:
        nxt = parent[c]
        parent[c] = r
        c = nxt
    return r


@njit(cache=True)
def _push(ded_c, ded_x, st, c, x):
    top = st[DTOP]
    if top >= ded_c.shape[0]:
        st[DOVERFLOW] = 1
        return
    ded_c[top] = c
    ded_x[top] = x
    st[DTOP] = top + 1


@njit(cache=True)
def _consistent(table, parent, st):
    ncols = table.shape[1]
    for c in range(1, st[N_ALLOC] + 1):
        if parent[c] != c:
            continue
        for x in range(ncols):
            d = table[c, x]
            if d != 0 and (parent[d] != d or table[d, x ^ 1] != c):
                return False
    return True


@njit(cache=True)
def _coincidence(table, parent, queue, ded_c, ded_x, st, a, b, felsch, debug):
    ncols = table.shape[1]
    qhead = 0
    qtail = 0
    a = _rep(parent, a)
    b = _rep(parent, b)
    if a == b:
        return
    if a > b:
        a, b = b, a
    parent[b] = a
    queue[qtail] = b
    qtail += 1
    while qhead < qtail:
        g = queue[qhead]
        qhead += 1
        st[N_LIVE] -= 1
        st[MERGES] += 1
        for x in range(ncols):
            d = table[g, x]
            if d == 0:
                continue
            xi = x ^ 1
            table[d, xi] = 0
            mu = _rep(parent, g)
            nu = _rep(parent, d)
            if table[mu, x] != 0:
                u = _rep(parent, table[mu, x])
                v = nu
            elif table[nu, xi] != 0:
                u = _rep(parent, table[nu, xi])
                v = mu
            else:
                table[mu, x] = nu
                table[nu, xi] = mu
                if felsch:
                    _push(ded_c, ded_x, st, mu, x)
                continue
            if u != v:
                if u > v:
                    u, v = v, u
                parent[v] = u
                queue[qtail] = v
                qtail += 1
    if debug and not _consistent(table, parent, st):
        st[BAD] = 1


@njit(cache=True)
def _define(table, parent, ded_c, ded_x, st, c, x, felsch):
    if st[N_ALLOC] >= table.shape[0] - 1:
        return False
    st[N_ALLOC] += 1
    e = st[N_ALLOC]
    parent[e] = e
    for y in range(table.shape[1]):
        table[e, y] = 0
    table[c, x] = e
    table[e, x ^ 1] = c
    st[N_LIVE] += 1
    st[DEFINED] += 1
    if st[N_LIVE] > st[PEAK]:
        st[PEAK] = st[N_LIVE]
    if felsch:
        _push(ded_c, ded_x, st, c, x)
    return True


@njit(cache=True)
def _scan(table, parent, queue, ded_c, ded_x, st, alpha, word, s, n, fill, felsch, debug):
    """Scan ``word[s:s+n]`` at ``alpha``; returns False only when a fill ran out of room."""
    f = alpha
    b = alpha
    i = s
    j = s + n - 1
    while True:
        while i <= j and table[f, word[i]] != 0:
            f = table[f, word[i]]
            i += 1
        if i > j:
            if f != b:
                _coincidence(table, parent, queue, ded_c, ded_x, st, f, b, felsch, debug)
            return True
        while j >= i and table[b, word[j] ^ 1] != 0:
            b = table[b, word[j] ^ 1]
            j -= 1
        if j < i:
            _coincidence(table, parent, queue, ded_c, ded_x, st, f, b, felsch, debug)
            return True
        if i == j:
            table[f, word[i]] = b
            table[b, word[i] ^ 1] = f
            if felsch:
                _push(ded_c, ded_x, st, f, word[i])
            return True
        if not fill:
            return True
        if not _define(table, parent, ded_c, ded_x, st, f, word[i], felsch):
            return False


@njit(cache=True)
def _compact(table, parent, st, alpha):
    """Renumber live cosets 1..n_live in order; returns the new position of ``alpha``."""
    n = st[N_ALLOC]
    newnum = np.zeros(n + 1, dtype=np.int32)
    k = 0
    new_alpha = 0
    for c in range(1, n + 1):
        if c == alpha:
            new_alpha = k + 1
        if parent[c] == c:
            k += 1
            newnum[c] = k
    if alpha > n:
        new_alpha = k + 1
    ncols = table.shape[1]
    for c in range(1, n + 1):
        if parent[c] != c:
            continue
        nc = newnum[c]
        for x in range(ncols):
            d = table[c, x]
            table[nc, x] = newnum[d] if d != 0 else 0
    for c in range(1, k + 1):
        parent[c] = c
    st[N_ALLOC] = k
    return new_alpha


@njit(cache=True)
def _process_deductions(table, parent, queue, ded_c, ded_x, st,
                        conj_data, conj_start, conj_len, col_begin, col_end,
                        rel_data, rel_start, rel_len, debug):
    while True:
        while st[DTOP] > 0:
            st[DTOP] -= 1
            c = ded_c[st[DTOP]]
            x = ded_x[st[DTOP]]
            if parent[c] != c:
                continue
            for k in range(col_begin[x], col_end[x]):
                _scan(table, parent, queue, ded_c, ded_x, st, c,
                      conj_data, conj_start[k], conj_len[k], False, True, debug)
                if parent[c] != c:
                    break
            if parent[c] != c:
                continue
            d = table[c, x]
            if d == 0:
                continue
            xi = x ^ 1
            for k in range(col_begin[xi], col_end[xi]):
                _scan(table, parent, queue, ded_c, ded_x, st, d,
                      conj_data, conj_start[k], conj_len[k], False, True, debug)
                if parent[d] != d:
                    break
        if st[DOVERFLOW] == 0:
            return
        # lost deductions: rescan everything
        st[DOVERFLOW] = 0
        for c in range(1, st[N_ALLOC] + 1):
            for r in range(rel_start.shape[0]):
                if parent[c] != c:
                    break
                _scan(table, parent, queue, ded_c, ded_x, st, c,
                      rel_data, rel_start[r], rel_len[r], False, True, debug)


@njit(cache=True)
def _lookahead(table, parent, queue, ded_c, ded_x, st, rel_data, rel_start, rel_len, debug):
    for c in range(1, st[N_ALLOC] + 1):
        for r in range(rel_start.shape[0]):
            if parent[c] != c:
                break
            _scan(table, parent, queue, ded_c, ded_x, st, c,
                  rel_data, rel_start[r], rel_len[r], False, False, debug)


@njit(cache=True)
def enumerate_cosets(ncols, max_cosets, rel_data, rel_start, rel_len,
                     sub_data, sub_start, sub_len,
                     conj_data, conj_start, conj_len, col_begin, col_end,
                     strategy, debug, deduction_capacity):
    table = np.zeros((max_cosets + 1, ncols), dtype=np.int32)
    parent = np.zeros(max_cosets + 1, dtype=np.int32)
    queue = np.zeros(max_cosets + 1, dtype=np.int32)
    felsch = strategy == FELSCH
    cap = deduction_capacity if felsch else 1
    ded_c = np.zeros(cap, dtype=np.int32)
    ded_x = np.zeros(cap, dtype=np.int32)
    st = np.zeros(NSTATE, dtype=np.int64)
    st[N_ALLOC] = 1
    st[N_LIVE] = 1
    st[PEAK] = 1
    st[DEFINED] = 1
    parent[1] = 1
    status = COMPLETE
    alpha = 1

    if felsch:
        for h in range(sub_start.shape[0]):
            if not _scan(table, parent, queue, ded_c, ded_x, st, 1,
                         sub_data, sub_start[h], sub_len[h], True, True, debug):
                status = CAPPED
                break
            _process_deductions(table, parent, queue, ded_c, ded_x, st,
                                conj_data, conj_start, conj_len, col_begin, col_end,
                                rel_data, rel_start, rel_len, debug)
        while status == COMPLETE and alpha <= st[N_ALLOC]:
            if parent[alpha] == alpha:
                for x in range(ncols):
                    if table[alpha, x] != 0:
                        continue
                    if st[N_ALLOC] >= max_cosets:
                        alpha = _compact(table, parent, st, alpha)
                        if max_cosets - st[N_ALLOC] < max(1, max_cosets // 64):
                            status = CAPPED
                            break
                    _define(table, parent, ded_c, ded_x, st, alpha, x, True)
                    _process_deductions(table, parent, queue, ded_c, ded_x, st,
                                        conj_data, conj_start, conj_len, col_begin, col_end,
                                        rel_data, rel_start, rel_len, debug)
                    if st[BAD] or parent[alpha] != alpha:
                        break
            if st[BAD]:
                status = INCONSISTENT
            alpha += 1
    else:
        sub_done = False
        while True:
            need = False
            if not sub_done:
                for h in range(sub_start.shape[0]):
                    if not _scan(table, parent, queue, ded_c, ded_x, st, 1,
                                 sub_data, sub_start[h], sub_len[h], True, False, debug):
                        need = True
                        break
                if not need:
                    sub_done = True
            if not need:
                while alpha <= st[N_ALLOC]:
                    if parent[alpha] == alpha:
                        for r in range(rel_start.shape[0]):
                            if not _scan(table, parent, queue, ded_c, ded_x, st, alpha,
                                         rel_data, rel_start[r], rel_len[r], True, False, debug):
                                need = True
                                break
                            if parent[alpha] != alpha:
                                break
                        if need:
                            break
                        if parent[alpha] == alpha:
                            for x in range(ncols):
                                if table[alpha, x] == 0:
                                    if not _define(table, parent, ded_c, ded_x, st, alpha, x, False):
                                        need = True
                                        break
                            if need:
                                break
                    if st[BAD]:
                        break
                    alpha += 1
            if st[BAD]:
                status = INCONSISTENT
                break
            if not need:
                break
            # give up unless compaction or lookahead reclaims a useful share of the table
            slack = max(1, max_cosets // 64)
            alpha = _compact(table, parent, st, alpha)
            if max_cosets - st[N_ALLOC] >= slack:
                continue
            _lookahead(table, parent, queue, ded_c, ded_x, st, rel_data, rel_start, rel_len, debug)
            alpha = _compact(table, parent, st, alpha)
            if max_cosets - st[N_ALLOC] < slack:
                status = CAPPED
                break
    if st[BAD]:
        status = INCONSISTENT
    _compact(table, parent, st, 1)
    return status, table, st
