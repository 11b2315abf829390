"""Brute-force oracle for the frozen finite-ring values used in the C++ tests.

Independent of the C++ code: rings are enumerated directly as tuples of
matrix entries with numpy-free integer arithmetic.
"""
import itertools


def mat_ring(n, m, upper=False):
    cells = [(i, j) for i in range(n) for j in range(n) if not upper or i <= j]
    elems = []
    for vals in itertools.product(range(m), repeat=len(cells)):
        a = [[0] * n for _ in range(n)]
        for (i, j), v in zip(cells, vals):
            a[i][j] = v
        elems.append(tuple(tuple(r) for r in a))
    return elems


def mul(a, b, m):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % m for j in range(n)) for i in range(n))


def add(a, b, m):
    return tuple(tuple((x + y) % m for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a, b, m):
    return tuple(tuple((x - y) % m for x, y in zip(r, s)) for r, s in zip(a, b))


def comm(a, b, m):
    return sub(mul(a, b, m), mul(b, a, m), m)


def xi(n, m, upper=False, cap=10):
    R = mat_ring(n, m, upper)
    L0 = {comm(a, b, m) for a in R for b in R}
    P = {mul(a, b, m) for a in L0 for b in L0}
    S = set(P)
    for N in range(1, cap + 1):
        if len(S) == len(R):
            return N, len(L0), len(P)
        T = {add(s, p, m) for s in S for p in P}
        if T == S:
            return None, len(L0), len(P)
        S = T
    return "cap", len(L0), len(P)


if __name__ == "__main__":
    print("M2(F2)", xi(2, 2))
    print("M2(Z4)", xi(2, 4))
    print("U2(F2)", xi(2, 2, True))
    print("U3(F2)", xi(3, 2, True))
    print("M2(Z3)", xi(2, 3))
    R = mat_ring(2, 2, True)
    print("U2(F2) commutators", sorted({comm(a, b, 2) for a in R for b in R}))


def section2(n, m, upper=False):
    R = mat_ring(n, m, upper)
    zero = R[0]
    L0 = sorted({comm(a, b, m) for a in R for b in R})
    c1 = all(mul(a, b, m) == mul(b, a, m) for a in R for b in R)
    c2 = all(comm(c, r, m) == zero for c in L0 for r in R)
    c3 = all(comm(c1_, mul(c2_, c3_, m), m) == zero for c1_ in L0 for c2_ in L0 for c3_ in L0)
    c4 = all(comm(a, b, m) == zero for a in L0 for b in L0)
    semiprime = all(any(mul(mul(a, r, m), a, m) != zero for r in R) for a in R if a != zero)
    # ideal generated by commutators (unital ring)
    ideal = set(L0)
    frontier = list(ideal)
    while frontier:
        x = frontier.pop()
        cand = [mul(r, x, m) for r in R] + [mul(x, r, m) for r in R] + [add(x, y, m) for y in list(ideal)]
        for c in cand:
            if c not in ideal:
                ideal.add(c)
                frontier.append(c)
    def nilp(x):
        p = x
        for _ in range(len(R)):
            if p == zero:
                return True
            p = mul(p, x, m)
        return p == zero
    nil = all(nilp(x) for x in ideal)
    return dict(c1=c1, c2=c2, c3=c3, c4=c4, semiprime=semiprime, ideal=len(ideal), nil=nil)


if __name__ == "__main__":
    for args in [(2, 2), (2, 4), (2, 2, True), (3, 2, True)]:
        print(args, section2(*args))
