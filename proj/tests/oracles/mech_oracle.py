#!/usr/bin/env python3
# Copyright 2026 The PVI Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent plaintext mechanisms used to freeze expected values in
tests/unit/mech_test.cpp. Prints one C++ initializer per instance."""
from fractions import Fraction as F
import random


def het(bids, lims, B):
    order = sorted(range(len(bids)), key=lambda i: (bids[i], i))
    S, tot = [], 0
    for i in order:
        if bids[i] * (tot + lims[i]) <= B:
            S.append(i)
            tot += lims[i]
        else:
            break
    if not S:
        return None, {}
    price = F(B, tot)
    if len(S) < len(order):
        price = min(price, bids[order[len(S)]])
    return price, {i: (lims[i], price * lims[i]) for i in S}


def U(G, S):
    s = set()
    for j in S:
        s |= G[j]
    return len(s)


def argmax(cands, G, bids, T):
    best = None
    for j in sorted(cands):
        v = F(U(G, T + [j]) - U(G, T), bids[j])
        if best is None or v > best[0]:
            best = (v, j)
    return best[1]


def sub(G, bids, B):
    n = len(bids)
    S, rest = [], set(range(n))
    while rest and B > 0:
        i = argmax(rest, G, bids, S)
        mi = U(G, S + [i]) - U(G, S)
        if F(mi, bids[i]) >= F(U(G, S + [i]), B):
            S.append(i)
            rest.discard(i)
        else:
            break
    pay = {}
    for i in S:
        others = set(range(n)) - {i}
        T, p = [], F(0)
        while True:
            if not (others - set(T)):
                ui = U(G, T + [i]) - U(G, T)
                if ui > 0:
                    p = max(p, F(ui * B, U(G, T + [i])))
                break
            ij = argmax(others - set(T), G, bids, T)
            ui = U(G, T + [i]) - U(G, T)
            uij = U(G, T + [ij]) - U(G, T)
            eta = F(ui * B, U(G, T + [i]))
            term = eta if uij == 0 else min(F(ui * bids[ij], uij), eta)
            p = max(p, term)
            T = T + [ij]
            if uij == 0 or bids[ij] > F(uij * B, U(G, T)):
                break
        pay[i] = p
    return S, pay


def frac(q):
    return '"%d/%d"' % (q.numerator, q.denominator)


def main():
    rng = random.Random(20261015)
    print("// heterogeneous: bids, limits, budget, price, {id, f, payment}")
    for _ in range(12):
        n = rng.randint(1, 7)
        bids = [F(rng.randint(1, 6), rng.choice([1, 2])) for _ in range(n)]
        lims = [rng.randint(1, 4) for _ in range(n)]
        B = F(rng.randint(1, 40))
        price, out = het(bids, lims, B)
        print("{{%s}, {%s}, %s, %s, {%s}}," % (
            ", ".join(frac(b) for b in bids), ", ".join(map(str, lims)), frac(B),
            frac(price) if price is not None else '""',
            ", ".join("{%d, %d, %s}" % (i + 1, f, frac(p)) for i, (f, p) in out.items())))
    print("// submodular: ground, {bid, {assignments}}, budget, {id, payment} in admission order")
    for _ in range(12):
        n = rng.randint(1, 7)
        m = rng.randint(1, 6)
        G = []
        for _ in range(n):
            s = set()
            while not s:
                s = {k for k in range(m) if rng.random() < 0.4}
            G.append(s)
        bids = [F(rng.randint(1, 5)) for _ in range(n)]
        B = F(rng.randint(1, 20))
        S, pay = sub(G, bids, B)
        print("{%d, {%s}, %s, {%s}}," % (
            m, ", ".join("{%s, {%s}}" % (frac(bids[i]), ", ".join(map(str, sorted(G[i])))) for i in range(n)),
            frac(B), ", ".join("{%d, %s}" % (i + 1, frac(pay[i])) for i in S)))
    ex = [{0, 1}, {1, 2}, {2}]
    print("// three-user example:", sub(ex, [F(1)] * 3, F(4)))
    print("// two-user example:", sub(ex[:2], [F(1)] * 2, F(4)))
    print("// single user:", sub([{0}], [F(1)], F(1)))


if __name__ == "__main__":
    main()
