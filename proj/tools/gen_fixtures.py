#!/usr/bin/env python3
# Copyright 2026 The hodgefil Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate cusp-form q-expansion fixtures for hodgefil.

Requires cypari2 (PARI/GP). Not part of the library or its build; the
fixtures it writes are checked in under data/.

For prime N the Atkin-Lehner sign of a newform is read off its U_N
eigenvalue: f | W_N = -a_N(f) / N^(k/2 - 1) * f.  In weight 2 the plus part
of the new space is ker(U_N + 1) and the minus part ker(U_N - 1).

In weight 12 the U_N matrix is too expensive for larger N (PARI needs about
N times the Sturm bound of coefficients), so S_12^+ is built as the span of
W_N-invariant products instead:

  * weight 2: E_2(z) - N E_2(Nz) (W_N sign -1) and the weight-2 plus/minus
    newforms;
  * weight 4, 6: E_k(z) +/- N^(k/2) E_k(Nz) (sign +/-1);
  * weight 12: Delta(z) + N^6 Delta(Nz) and (eta(z) eta(Nz))^12.

A product of total weight 12 with sign +1 containing a cusp form vanishes at
infinity and hence, being W_N-invariant, at the cusp 0 as well, so it lies
in S_12^+.  Products are added until their rank reaches
dim S_12^+ = (N+1)/2 - g, which proves they span.  For N = 67 and 97 this
reproduces exactly the span of ker(U_N + N^5) plus the old form.

Usage: gen_fixtures.py --level 67 --out data [--precision P]
"""

import argparse
import json
import random
from fractions import Fraction
from pathlib import Path

import cypari2

pari = cypari2.Pari()
pari.allocatemem(4 * 10**9, silent=True)


PRIME = 1000000007  # used only to pick pivots and spanning products quickly


def to_fraction(c):
    return Fraction(int(pari.numerator(c)), int(pari.denominator(c)))


def rref(vecs, prec):
    """Reduced row echelon form of the coefficient rows a_1 .. a_{prec-1}.

    Pivots sit on the lowest exponents and are monic. The pivot columns are
    found modulo PRIME; the exact form is then B^-1 M with B the pivot
    columns, and the echelon shape is re-checked over Q.
    """
    m = pari.matrix(len(vecs), prec - 1, [c for v in vecs for c in v[1:prec]])
    rows = [[int(pari.numerator(c)) * pow(int(pari.denominator(c)), PRIME - 2, PRIME) % PRIME
             for c in v[1:prec]] for v in vecs]
    pivots = []
    reduced = []
    for v in rows:
        for piv, r in zip(pivots, reduced):
            if v[piv]:
                c = v[piv]
                v = [(a - c * b) % PRIME for a, b in zip(v, r)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            raise RuntimeError("forms are dependent or precision too low")
        inv = pow(v[piv], PRIME - 2, PRIME)
        v = [x * inv % PRIME for x in v]
        reduced = [[(a - r[piv] * b) % PRIME for a, b in zip(r, v)] for r in reduced]
        pivots.append(piv)
        reduced.append(v)
    pivots.sort()
    b = pari.matrix(len(vecs), len(pivots),
                    [m[i, j] for i in range(len(vecs)) for j in pivots])
    r = pari.matsolve(b, m)
    out = []
    for i, piv in enumerate(pivots):
        row = [to_fraction(r[i, j]) for j in range(prec - 1)]
        assert row[piv] == 1 and all(x == 0 for x in row[:piv])
        assert all(row[p] == 0 for p in pivots if p != piv)
        out.append(row)
    return out


def newforms_with_sign(level, sign, prec):
    """Weight-2 newforms f with f | W_N = sign * f, integrally scaled."""
    mats = pari(f'my(mf = mfinit([{level},2,1],0)); mfcoefs(mf,{prec - 1}) * '
                f'matker(mfheckemat(mf,{level}) + ({sign}))')
    ncols = int(pari.matsize(mats)[1])
    out = []
    for j in range(ncols):
        col = pari.vector(prec, [mats[i, j] for i in range(prec)])
        out.append(pari.Ser(col * pari.denominator(col), 'q', prec))
    return out


def plus_space(level, weight, prec):
    if weight == 2:
        return [[pari.polcoef(f, n, 'q') for n in range(prec)]
                for f in newforms_with_sign(level, 1, prec)]
    assert weight == 12
    qs = pari(f'q + O(q^{prec})')

    def dilate(f):
        return pari.subst(pari.truncate(f), 'q', pari(f'q^{level}')) + pari(f'O(q^{prec})')

    def eisenstein(k, c):
        return pari(f'{1}{"+" if c > 0 else "-"}{abs(c)}*sum(n=1,{prec - 1},sigma(n,{k - 1})*q^n)'
                    f' + O(q^{prec})')

    e2, e4, e6 = eisenstein(2, -24), eisenstein(4, 240), eisenstein(6, -504)
    # (weight, W_N sign, contains a cusp form, series)
    pool = [(2, -1, False, e2 - level * dilate(e2))]
    pool += [(2, 1, True, f) for f in newforms_with_sign(level, 1, prec)]
    pool += [(2, -1, True, f) for f in newforms_with_sign(level, -1, prec)]
    pool += [(4, 1, False, e4 + level**2 * dilate(e4)), (4, -1, False, e4 - level**2 * dilate(e4)),
             (6, 1, False, e6 + level**3 * dilate(e6)), (6, -1, False, e6 - level**3 * dilate(e6))]
    delta = qs * pari.eta(qs) ** 24
    eta_n = pari.subst(pari.truncate(pari.eta(qs)), 'q', pari(f'q^{level}')) + pari(f'O(q^{prec})')
    seeds = [delta + level**6 * dilate(delta),
             pari(f'q^{(level + 1) // 2}') * (pari.eta(qs) * eta_n) ** 12]

    target = (level + 1) // 2 - (len([p for p in pool if p[1] == 1 and p[2]]))
    echelon = {}  # pivot -> row mod PRIME
    chosen = []

    def try_add(f):
        v = [int(pari.polcoef(f, n, 'q')) % PRIME for n in range(prec)]
        for piv, r in echelon.items():
            if v[piv]:
                c = v[piv]
                v = [(a - c * b) % PRIME for a, b in zip(v, r)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return
        inv = pow(v[piv], PRIME - 2, PRIME)
        v = [x * inv % PRIME for x in v]
        for p, r in echelon.items():
            if r[piv]:
                c = r[piv]
                echelon[p] = [(a - c * b) % PRIME for a, b in zip(r, v)]
        echelon[piv] = v
        chosen.append(f)

    for f in seeds:
        try_add(f)
    rng = random.Random(level)
    tries = 0
    while len(chosen) < target:
        tries += 1
        if tries > 200000:
            raise RuntimeError(f'products span only {len(chosen)} of {target} dimensions')
        w, sign, cusp, f = 0, 1, False, pari(1)
        while w < 12:
            k, s, c, g = rng.choice([p for p in pool if p[0] <= 12 - w])
            w, sign, cusp, f = w + k, sign * s, cusp or c, f * g
        if sign == 1 and cusp:
            try_add(f)
    return [[pari.polcoef(f, n, 'q') for n in range(prec)] for f in chosen]


def full_space(level, weight, prec):
    mats = pari(f'mfcoefs(mfinit([{level},{weight},1],1),{prec - 1})')
    ncols = int(pari.matsize(mats)[1])
    return [[mats[i, j] for i in range(prec)] for j in range(ncols)]


def fraction_string(x):
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def write_fixture(path, level, weight, sign, prec, rows):
    forms = []
    for r in rows:
        lead = next(i for i, x in enumerate(r) if x != 0)
        forms.append({
            'valuation': lead + 1,
            'coefficients': [fraction_string(x) for x in r[lead:]],
        })
    doc = {'level': level, 'weight': weight, 'atkin_lehner': sign,
           'precision': prec, 'forms': forms}
    path.write_text(json.dumps(doc, separators=(',', ':')) + '\n')
    print(f'wrote {path} ({len(forms)} forms, precision {prec})')


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('--level', type=int, required=True)
    ap.add_argument('--out', type=Path, default=Path('data'))
    ap.add_argument('--precision', type=int, default=0)
    ap.add_argument('--prime', type=int, default=3)
    args = ap.parse_args()
    n = args.level
    args.out.mkdir(parents=True, exist_ok=True)

    g = len(plus_space(n, 2, 8))
    d = (n + 1) // 2 - g
    # Matches the pipeline's declared minimum, plus a little headroom.
    prec = args.precision or ((n + 1) // 2 + args.prime * (g + d - 1 + 3) + (n - 7) + 8)

    w2 = rref(plus_space(n, 2, prec), prec)
    w12 = rref(plus_space(n, 12, prec), prec)
    full = rref(full_space(n, 2, prec), prec)
    assert len(w2) == g and len(w12) == d, (len(w2), len(w12), g, d)

    write_fixture(args.out / f'{n}_w2_plus.json', n, 2, '+', prec, w2)
    write_fixture(args.out / f'{n}_w12_plus.json', n, 12, '+', prec, w12)
    write_fixture(args.out / f'{n}_w2_full.json', n, 2, 'full', prec, full)


if __name__ == '__main__':
    main()
