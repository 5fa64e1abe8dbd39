import pytest


def perm_mul(p, q):
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def perm_power(p, k):
    out = tuple(range(len(p)))
    for _ in range(k):
        out = perm_mul(out, p)
    return out


def closure(gens):
    """All products of ``gens``, by breadth-first search."""
    identity = tuple(range(len(gens[0])))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def from_cycles(n, *cycs):
    p = list(range(n))
    for c in cycs:
        for a, b in zip(c, c[1:] + c[:1]):
            p[a] = b
    return tuple(p)


@pytest.fixture
def oracle():
    class Oracle:
        mul = staticmethod(perm_mul)
        power = staticmethod(perm_power)
        closure = staticmethod(closure)
        cycles = staticmethod(from_cycles)
    return Oracle
