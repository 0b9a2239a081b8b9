"""Independent oracle for the signature tests.

Reads data/catalogue.json, picks its own admissible parameter point per entry,
and computes the series, ideal and derivation-algebra dimensions with sympy's exact QQ<I> matrices.
Nothing here shares code with the C++ library; the output is frozen into
tests/data/oracle_signatures.json and compared field by field by the unit tests.

    python3 tests/oracle/derive_signatures.py > tests/data/oracle_signatures.json
"""
import itertools
import json
import pathlib
import sys

from sympy import I, Matrix, Rational, expand, linear_eq_to_matrix, symbols, sympify
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

ROOT = pathlib.Path(__file__).resolve().parents[2]
CANDIDATES = [Rational(2), Rational(3), Rational(-1, 2), 1 + I, Rational(5), 2 - I, Rational(7, 3), Rational(-4), 3 * I, Rational(11)]


def ev(text, env):
    return sympify(text, locals={"i": I, **env})


def admissible(entry, env):
    for c in entry["constraints"]:
        exprs = c if isinstance(c, list) else [c]
        if all(ev(x, env) == 0 for x in exprs):
            return False
    return True


def pick_point(entry):
    ps = entry["params"]
    if not ps:
        return {}
    # distinct values first so accidental coincidences are unlikely
    for combo in itertools.permutations(CANDIDATES, len(ps)):
        env = dict(zip(ps, combo))
        if admissible(entry, env):
            return env
    raise SystemExit(f"no admissible point for {entry['name']}")


def dm(rows, n):
    rows = [[QQ_I.from_sympy(sympify(x)) for x in r] for r in rows] or [[QQ_I.zero] * n]
    return DomainMatrix(rows, (len(rows), n), QQ_I)


def span(vectors, n):
    """Row basis (rref) of the span."""
    vs = [v for v in vectors if any(x != 0 for x in v)]
    if not vs:
        return []
    r, piv = dm(vs, n).rref()
    return r.to_Matrix().tolist()[: len(piv)]


def algebra(entry, env, n):
    T = {}
    for p in entry["products"]:
        v = [0] * n
        for k, c in p["value"]:
            v[k - 1] += ev(c, env)
        T[(p["left"] - 1, p["right"] - 1)] = v
    return T


def bracket(T, x, y, n):
    out = [0] * n
    for (a, b), v in T.items():
        c = x[a] * y[b]
        if c != 0:
            out = [o + c * w for o, w in zip(out, v)]
    return out


def unit(n, k):
    return [1 if j == k else 0 for j in range(n)]


def product_space(T, U, V, n):
    return span([bracket(T, u, v, n) for u in U for v in V], n)


def kernel_dim(rows, n):
    if not rows:
        return n
    return n - dm(rows, n).rank()


def signature(T, n):
    full = [unit(n, k) for k in range(n)]
    lcs, cur = [n], full
    while cur:
        nxt = product_space(T, full, cur, n)
        if len(nxt) == len(cur):
            break
        cur = nxt
        lcs.append(len(cur))
    a2 = product_space(T, full, full, n)
    der, cur = [len(a2)], a2
    while cur:
        nxt = product_space(T, cur, cur, n)
        if len(nxt) == len(cur):
            break
        cur = nxt
        der.append(len(cur))
    leib = span([bracket(T, full[i], full[i], n) for i in range(n)]
                + [[p + q for p, q in zip(bracket(T, full[i], full[j], n), bracket(T, full[j], full[i], n))]
                   for i in range(n) for j in range(i + 1, n)], n)
    # x in left annihilator: sum_i x_i [e_i, e_j] = 0 for all j
    left_rows, right_rows = [], []
    for j in range(n):
        for k in range(n):
            left_rows.append([bracket(T, full[i], full[j], n)[k] for i in range(n)])
            right_rows.append([bracket(T, full[j], full[i], n)[k] for i in range(n)])
    return {
        "lower_central": lcs,
        "derived": der,
        "dim_leib": len(leib),
        "dim_left_ann": kernel_dim(left_rows, n),
        "dim_right_ann": kernel_dim(right_rows, n),
        "dim_center": kernel_dim(left_rows + right_rows, n),
        "dim_der": derivation_dim(T, n),
    }


def derivation_dim(T, n):
    """dim of {D : D[x,y] = [Dx,y] + [x,Dy]}, solved symbolically."""
    d = symbols(f"d0:{n * n}")
    D = Matrix(n, n, d)
    full = [unit(n, k) for k in range(n)]
    eqs = []
    for i in range(n):
        for j in range(n):
            lhs = D * Matrix(bracket(T, full[i], full[j], n))
            r1 = bracket(T, list(D[:, i]), full[j], n)
            r2 = bracket(T, full[i], list(D[:, j]), n)
            eqs += [expand(lhs[k] - r1[k] - r2[k]) for k in range(n)]
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return n * n
    A, _ = linear_eq_to_matrix(eqs, d)
    return n * n - dm(A.tolist(), n * n).rank()


def fmt(x):
    s = str(sympify(x)).replace("I", "i").replace(" ", "")
    return s


def main():
    cat = json.loads((ROOT / "data" / "catalogue.json").read_text())
    n = cat["dimension"]
    out = []
    for e in cat["entries"]:
        env = pick_point(e)
        rec = {"entry": e["name"], "params": ",".join(f"{k}={fmt(v)}" for k, v in env.items())}
        rec.update(signature(algebra(e, env, n), n))
        out.append(rec)
    json.dump({"oracle": "sympy QQ<I>", "records": out}, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
