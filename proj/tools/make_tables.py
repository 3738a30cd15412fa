"""Writes Cayley tables for the order <= 16 groups that have no split
metacyclic presentation."""

import itertools
import pathlib
import sys


def closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def table(elems, mul):
    index = {e: i for i, e in enumerate(elems)}
    return [[index[mul(a, b)] for b in elems] for a in elems]


def perm_mul(p, q):
    # apply p first, then q
    return tuple(q[i] for i in p)


def perm_group(n, cycles_list):
    gens = []
    for cycles in cycles_list:
        p = list(range(n))
        for c in cycles:
            for i, x in enumerate(c):
                p[x] = c[(i + 1) % len(c)]
        gens.append(tuple(p))
    ident = tuple(range(n))
    elems = closure(gens, perm_mul, ident)
    return elems, perm_mul


def quaternion_like(n, m, r, s):
    """<a, b | a^n, b^m = a^s, b^-1 a b = a^r>, as pairs (i, j) meaning a^i b^j."""

    def mul(x, y):
        i, j = x
        k, l = y
        # b^j a^k = a^(k r^j) b^j
        e = i + k * pow(r, j, n)
        t = j + l
        if t >= m:
            t -= m
            e += s
        return (e % n, t)

    elems = [(i, j) for j in range(m) for i in range(n)]
    return elems, mul


def matrix_group(gens):
    # 2x2 matrices over Z[i], entries as (re, im)
    def cmul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def cadd(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mul(x, y):
        return tuple(
            tuple(cadd(cmul(x[r][0], y[0][c]), cmul(x[r][1], y[1][c])) for c in range(2)) for r in range(2)
        )

    ident = (((1, 0), (0, 0)), ((0, 0), (1, 0)))
    return closure(gens, mul, ident), mul


def direct(g1, g2):
    e1, m1 = g1
    e2, m2 = g2
    elems = list(itertools.product(e1, e2))

    def mul(x, y):
        return (m1(x[0], y[0]), m2(x[1], y[1]))

    return elems, mul


def cyclic(n):
    return list(range(n)), lambda a, b: (a + b) % n


def semidirect_c4c2_c2():
    # N = C4 x C2 = <a> x <b>, c acts by a -> ab, b -> b
    def phi(x):
        return (x[0], (x[1] + x[0]) % 2)

    def mul(x, y):
        n1, k1 = x
        n2, k2 = y
        m = phi(n2) if k1 else n2
        return (((n1[0] + m[0]) % 4, (n1[1] + m[1]) % 2), (k1 + k2) % 2)

    elems = [((i, j), k) for k in range(2) for j in range(2) for i in range(4)]
    return elems, mul


def groups():
    z = (0, 0)
    one = (1, 0)
    mone = (-1, 0)
    i_ = (0, 1)
    x = ((z, one), (one, z))
    zm = ((one, z), (z, mone))
    iI = ((i_, z), (z, i_))
    q8 = quaternion_like(4, 2, 3, 2)
    d8 = perm_group(4, [[(0, 1, 2, 3)], [(1, 3)]])
    return {
        "q8": q8,
        "a4": perm_group(4, [[(0, 1, 2)], [(0, 1), (2, 3)]]),
        "q16": quaternion_like(8, 2, 7, 4),
        "c2xd8": direct(cyclic(2), d8),
        "c2xq8": direct(cyclic(2), q8),
        "pauli": matrix_group([x, zm, iI]),
        "c2sq_c4": semidirect_c4c2_c2(),
    }


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "catalogs/tables")
    out.mkdir(parents=True, exist_ok=True)
    for name, (elems, mul) in groups().items():
        t = table(elems, mul)
        lines = [str(len(elems))] + [" ".join(map(str, row)) for row in t]
        (out / f"{name}.txt").write_text("\n".join(lines) + "\n")
        print(name, len(elems))


if __name__ == "__main__":
    main()
