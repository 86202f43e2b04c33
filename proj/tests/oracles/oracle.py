"""Independent reference values frozen into the unit tests.

Reduced-word counts use the descent recursion #rex(w) = sum over right
descents s of #rex(ws); Demazure values use sympy rational division.
"""
from functools import lru_cache
import itertools
import sympy as sp


def perm_of(word, n):
    p = list(range(1, n + 1))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def length(p):
    return sum(1 for a, b in itertools.combinations(range(len(p)), 2) if p[a] > p[b])


@lru_cache(maxsize=None)
def rex_count(p):
    if length(p) == 0:
        return 1
    total = 0
    for i in range(1, len(p)):
        if p[i - 1] > p[i]:
            q = list(p)
            q[i - 1], q[i] = q[i], q[i - 1]
            total += rex_count(tuple(q))
    return total


def demazure(expr, i, xs):
    swapped = expr.subs({xs[i - 1]: xs[i], xs[i]: xs[i - 1]}, simultaneous=True)
    return sp.expand(sp.cancel((expr - swapped) / (xs[i - 1] - xs[i])))


def main():
    for word, n in [("12321", 4), ("21321", 4), ("1214", 5), ("246", 7), ("121321", 4),
                    ("1234121321", 5), ("123121", 4), ("23121", 4), ("12312", 4), ("2321", 4)]:
        print("rex", word, rex_count(perm_of([int(c) for c in word], n)))
    xs = sp.symbols("x1:7")
    x1, x2, x3, x4 = xs[:4]
    cases = [
        (x1**2, 1), (x1**3 * x2, 1), (x1 * x2 * x3, 2), (x2**2 * x3 - 3 * x1 * x3**2, 2),
        (sp.Rational(1, 2) * x3**4 + x1 * x4, 3), (x1**2 * x2**2, 1), (x1 + 2 * x2 - x3, 1),
    ]
    for expr, i in cases:
        print("demazure", i, sp.sstr(expr), "->", sp.sstr(demazure(expr, i, xs)))


if __name__ == "__main__":
    main()
