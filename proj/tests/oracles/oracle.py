#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# Independent reference values for the C++ test suite. Uses sympy for field
# and primality questions and exact fractions everywhere else. Regenerate with
#   python3 tests/oracles/oracle.py > tests/fixtures/oracle.json

import itertools
import json
from fractions import Fraction

import mpmath
from sympy import Matrix, Poly, isprime, nextprime, primitive_root, symbols

mpmath.mp.dps = 40
X = symbols("x")


def frac(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def first_irreducible(p, d):
    # Monic degree d, lower coefficients scanned with c_0 varying fastest.
    for idx in itertools.count():
        coeffs, v = [], idx
        for _ in range(d):
            coeffs.append(v % p)
            v //= p
        if v:
            raise RuntimeError("exhausted")
        poly = Poly([1] + coeffs[::-1], X, modulus=p)
        if poly.is_irreducible:
            return coeffs + [1]


def smallest_prime_at_least(m):
    return m if isprime(m) else nextprime(m)


def subgroup(p, order, count):
    g = primitive_root(p)
    h = pow(g, (p - 1) // order, p)
    # order check by repeated multiplication
    x, k = h, 1
    while x != 1:
        x, k = x * h % p, k + 1
    return {"p": p, "primitive": g, "generator": h, "order_measured": k, "coset_reps": [pow(g, i, p) for i in range(count)]}


def composition_prime(rn, m, limit=65521):
    for p in range(2, limit + 1):
        if isprime(p) and (p - 1) % rn == 0 and (p - 1) // rn >= m:
            return p
    return None


def rs_code(q, n, k):
    words = []
    for msg in itertools.product(range(q), repeat=k):  # msg[0] most significant
        words.append(tuple(sum(m * pow(x, t, q) for t, m in enumerate(msg)) % q + 1 for x in range(1, n + 1)))
    return words


def hamming(a, b):
    return sum(x != y for x, y in zip(a, b))


def distance_stats(words):
    pairs = [(hamming(a, b)) for a, b in itertools.combinations(words, 2)]
    hist = {}
    for d in pairs:
        hist[d] = hist.get(d, 0) + 1
    return min(pairs), Fraction(sum(pairs), len(pairs)), hist


def avg_distance_closed(q, m, n):
    return Fraction((q - 1) * m, q * (m - 1)) * n


def h_q(q, x):
    q, x = mpmath.mpf(q), mpmath.mpf(x)
    return x * mpmath.log(q - 1, q) - x * mpmath.log(x, q) - (1 - x) * mpmath.log(1 - x, q)


def table2():
    rows = []
    for r, D, N, q, K in [(2, 13, 20, 3, 3), (2, 9, 10, 9, 2), (2, 12, 15, 9, 3), (3, 16, 20, 8, 3)]:
        M = q**K
        beta = (1 + (r - 1) * (1 - Fraction(D, N))) / r
        avg = 1 - avg_distance_closed(q, M, N) * Fraction(r - 1, r * N)
        rows.append({"r": r, "beta": frac(beta), "avg": frac(avg), "beta_f": float(beta), "avg_f": float(avg)})
    return rows


def yb_d_matrix(n, r, i):
    ell = r**n
    def drop(a):
        lo, hi = a % r ** (i - 1), a // r**i
        return lo + hi * r ** (i - 1)
    return [[b, a] for a in range(ell) for b in [drop(a)]]


def composed_b():
    words = rs_code(5, 4, 2)
    r, ell, n_outer = 2, 32, 4
    l = n_outer * ell
    counts = {}
    total, pairs, mx = 0, 0, 0
    for c, d in itertools.permutations(range(len(words)), 2):
        v = l - hamming(words[c], words[d]) * (r - 1) * ell // r
        counts[v] = counts.get(v, 0) + 1
        total, pairs, mx = total + v, pairs + 1, max(mx, v)
    return {"per_helper_histogram": {str(k): v for k, v in sorted(counts.items())}, "mean": frac(Fraction(total, pairs)),
            "max": mx, "epsilon_measured": frac(Fraction(mx * r, l) - 1)}


def main():
    rs = rs_code(5, 4, 2)
    dmin, davg, hist = distance_stats(rs)
    out = {
        "primes": {"251": isprime(251), "tower_6": smallest_prime_at_least(7), "tower_9": smallest_prime_at_least(10),
                   "tower_4": smallest_prime_at_least(5), "yebarg_4_2": smallest_prime_at_least(9)},
        "irreducible": [{"p": p, "d": d, "coeffs": first_irreducible(p, d)}
                        for p, d in [(2, 2), (2, 3), (2, 4), (3, 3), (5, 2), (5, 5), (7, 7), (11, 19), (7, 19)]],
        "subgroups": [subgroup(19, 6, 3), subgroup(251, 10, 25)],
        "composition_prime": {"A": composition_prime(6, 3), "B": composition_prime(10, 25)},
        "rs_5_4_2": {"M": len(rs), "min_distance": dmin, "average_distance": frac(davg), "histogram": {str(k): v for k, v in sorted(hist.items())},
                     "closed_form": frac(avg_distance_closed(5, 25, 4)), "first": list(rs[0]), "second": list(rs[1]), "last": list(rs[-1])},
        "average_distance": {"q9_M81_N10": frac(avg_distance_closed(9, 81, 10)), "q9_M729_N15": frac(avg_distance_closed(9, 729, 15))},
        "gv_rate_9_0_9": float(1 - h_q(9, mpmath.mpf("0.9"))),
        "max_code_length_theorem4_2_9_0_9": float((1 - h_q(9, mpmath.mpf("0.9"))) / 2**9),
        "gv_rate_2_1e-6": float(1 - h_q(2, mpmath.mpf("1e-6"))),
        "table2": table2(),
        "bounds": {"cut_set_6_3_5_3": frac(Fraction(5, 3) * 3), "cut_set_9_6_8_9": frac(Fraction(8, 3) * 9),
                   "twb_6_4": 4, "twb_6_3": 3, "min_ell_10_6_2": frac(Fraction(4, 2)), "min_ell_6_3_2": frac(Fraction(3, 2)),
                   "thm5_2_4_0": (2 * 4) ** 3, "thm5_2_16_0": (2 * 16) ** 9,
                   "gtc_rhs_6_3_27": float(2 * mpmath.log(27, 2) * (mpmath.log(27) / mpmath.log(mpmath.mpf(3) / 2) + 1) + 1)},
        "vandermonde_gf7_123_det": int(Matrix([[pow(x, e) for x in (1, 2, 3)] for e in range(3)]).det() % 7),
        "yb_d1_n4_r2": yb_d_matrix(4, 2, 1),
        "composed_b": composed_b(),
    }
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
