"""Independent closed-form oracle for the QLSA headline numbers.

Computes the excl/incl totals by hand-expanding the call tree into flat
multiplicities. Output values are frozen into tests/test_profile.cpp and
tests/acceptance.cpp.
"""
from collections import Counter

n0, n1, n2, n4, Nb, r, k = 14, 24, 30, 65, 9, 2_500_000_000_000, 2
mix_true = 4
KINDS = ("x", "y", "z", "h", "s", "t", "cnot")


class V:
    def __init__(self, c=None, depth=0, tdepth=0, anc=0, cyc=0, meas=0):
        self.c = Counter(c or {})
        self.depth, self.tdepth, self.anc, self.cyc, self.meas = depth, tdepth, anc, cyc, meas

    def __add__(self, o):  # sequential
        return V(self.c + o.c, self.depth + o.depth, self.tdepth + o.tdepth,
                 max(self.anc, o.anc), self.cyc + o.cyc, self.meas + o.meas)

    def __or__(self, o):  # parallel
        return V(self.c + o.c, max(self.depth, o.depth), max(self.tdepth, o.tdepth),
                 self.anc + o.anc, self.cyc + o.cyc, self.meas + o.meas)

    def __mul__(self, m):
        if m == 0:
            return V()
        return V({g: v * m for g, v in self.c.items()}, self.depth * m, self.tdepth * m,
                 self.anc, self.cyc * m, self.meas * m)

    def total(self):
        return sum(self.c[g] for g in KINDS)


def gate(g):
    return V({g: 1}, depth=1)


ROT = V({"t": 40, "h": 40, "s": 20}, 100, 40)
TOF = V({"h": 2, "s": 1, "t": 7, "cnot": 6}, 12, 6)


def mcnot(n):
    if n == 1:
        return V({"cnot": 1}, 1)
    if n == 2:
        return TOF
    m = 2 * n - 3
    v = TOF * m
    v.anc, v.cyc, v.meas = n - 2, n - 2, n - 2
    return v


def qft(b):
    if b == 1:
        return gate("h")
    nrot = 3 * b * (b - 1) // 2
    v = V({"h": b, "cnot": b * (b - 1), "t": 40 * nrot, "h2": 0})
    v.c["h"] += 40 * nrot
    v.c["s"] += 20 * nrot
    del v.c["h2"]
    v.depth = b * b + 2 * 100 * (b * (b - 1) // 2)
    v.tdepth = 2 * 40 * (b * (b - 1) // 2)
    return v


def ccphase(n, f):
    return V({"h": 164 * (n - 1), "s": 82 * (n - 1), "t": 174 * (n - 1), "x": 4 + 2 * f,
              "cnot": 16 * (n - 1) + 2}, 436 * (n - 1) + 6, 174 * (n - 1), 1, 1, 1)


def croty(n, f):
    return V({"h": 84 * (n - 1), "s": 42 * (n - 1), "t": 80 * (n - 1), "x": 2 * f, "cnot": 2 * n},
             202 * (n - 1) + 2 * f, 80 * (n - 1), 0, 1, 1)


def lifecycle(m):
    return V(cyc=m, meas=m)


W = V({"cnot": 3, "z": 4, "s": 6, "h": 4, "t": 2, "x": 2}, 21, 2)
CRZ = V({"cnot": 2}, 2) + ROT * 2
CZ = V({"h": 2, "cnot": 1}, 3)


def oracle(anc, h, s, t, x, cnot, depth, tdepth, meas):
    return V({"h": h, "s": s, "t": t, "x": x, "cnot": cnot}, depth, tdepth, anc, meas, meas)


A_F = oracle(4779020, 36206376, 18103188, 126722316, 24314146, 116377976, 248096178, 108619128, 4779020)
A_T = oracle(12900000, 133000000, 66600000, 466000000, 76400000, 413000000, 887000000, 400000000, 12900000)
O_B = oracle(204765119, 1641762800, 820881400, 5746169800, 1075933016, 5241180190, 11192585310, 4925288400, 204765119)
O_R = oracle(110576558, 888704520, 444352260, 3110465820, 582282144, 2836515650, 6057980506, 2666113560, 110576558)


def build(incl):
    z = lambda v: v if incl else V()
    hmag = W * (2 * n2) + TOF * (2 * n2) + CRZ * n4 + ccphase(n4, 0)
    kernel = (z(A_T) * mix_true + z(A_F) * (6 - mix_true) + hmag * 24 + ccphase(n4, 0)
              + ccphase(n4, 1) + TOF * n2 + gate("x") * (2 * n2) + lifecycle(n2 + 2 * n4))
    uz = kernel * (2 * Nb)
    ush = uz * (5 ** (k - 1)) * r
    solve_x = (ush * 2 + qft(n1) * 2 + z(A_F) * 2 + croty(n1, 0) + gate("h") * (2 * n1)
               + lifecycle(2 * n1))
    sp_b = z(O_B) * 2 + ccphase(n4, 0) + croty(n4, 0)
    sp_r = z(O_R) * 2 + ccphase(n4, 0) + croty(n4, 0)
    u_b = sp_b
    u_bx = sp_b + solve_x
    u_r = (sp_b | sp_r) + solve_x + gate("h") * 2 + TOF * (3 * n2)

    def ampest(u, flip, m):
        refl = gate("x") * (2 * m) + gate("h") * 2 + mcnot(m)
        grover = u * 2 + flip + refl
        return gate("h") * n0 + grover * (2 ** n0 - 1) + qft(n0) + lifecycle(n0)

    flip_x = gate("h") * 2 + TOF
    flip_r = gate("h") * 2 + mcnot(3)
    a_b = ampest(u_b, CZ, n2 + 1)
    a_x = ampest(u_bx, flip_x, n2 + 2)
    a_r = ampest(u_r, flip_r, 2 * n2 + 4)
    return a_b + a_x + a_r * 2


for incl in (False, True):
    v = build(incl)
    width = 287 + v.anc
    print("incl" if incl else "excl")
    print("  total", v.total(), "%.4e" % v.total())
    for g in KINDS:
        print("  ", g, v.c[g], "%.3e" % v.c[g])
    print("  depth", v.depth, "%.4e" % v.depth, "tdepth", v.tdepth, "%.4e" % v.tdepth)
    print("  width", width, "anc", v.anc, "cycles", v.cyc, "meas", v.meas, "%.4e" % v.meas)
