"""
Symmetric function utilities on explicit variable lists: power sums,
elementary and complete symmetric polynomials, Schur polynomials (Jacobi-Trudi),
Schur P-polynomials by shifted tableaux, and expansion in odd power sums.

Odd power-sum expansions are returned as ``{odd partition: coefficient}``;
the empty partition carries the constant term.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import flint

from .poly import FAMILIES, MAX_INDEX, ONE, ZERO, Polynomial, PolyError, as_poly, substitute, used_variables, var

P_FUNCTION_LIMIT = 10

Partition = tuple[int, ...]
OddExpansion = dict[Partition, flint.fmpq]


class SymfuncError(ValueError):
    pass


class NotSupersymmetric(SymfuncError):
    pass


def partition(parts: Sequence[int], strict: bool = False) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise SymfuncError(f"partition parts must be positive: {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b or (strict and a == b):
            raise SymfuncError(f"{parts} is not a {'strict ' if strict else ''}partition")
    return parts


def partitions(k: int, parts: Sequence[int] | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of k (optionally with parts drawn from ``parts``), decreasing."""
    max_part = k if max_part is None else max_part
    allowed = range(max_part, 0, -1) if parts is None else sorted((p for p in parts if p <= max_part), reverse=True)
    if k == 0:
        return [()]
    out = []
    for p in allowed:
        if p <= k:
            out += [(p,) + rest for rest in partitions(k - p, parts, p)]
    return out


def power_sum(k: int, variables: Sequence[Polynomial]) -> Polynomial:
    out = ZERO
    for v in variables:
        out += as_poly(v) ** k
    return out


def elementary(k: int, variables: Sequence[Polynomial]) -> Polynomial:
    # coefficient extraction from prod (1 + v T), built degree by degree
    e = [ONE] + [ZERO] * len(variables)
    for v in variables:
        for j in range(len(variables), 0, -1):
            e[j] = e[j] + e[j - 1] * as_poly(v)
    return e[k] if 0 <= k <= len(variables) else ZERO


def complete(k: int, variables: Sequence[Polynomial]) -> Polynomial:
    if k < 0:
        return ZERO
    h = [ONE] + [ZERO] * k
    for v in variables:
        for j in range(1, k + 1):
            h[j] = h[j] + h[j - 1] * as_poly(v)
    return h[k]


def _det(matrix: list[list[Polynomial]]) -> Polynomial:
    n = len(matrix)
    if n == 0:
        return ONE
    out = ZERO
    for j in range(n):
        if matrix[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = matrix[0][j] * _det(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def schur(lam: Sequence[int], variables: Sequence[Polynomial]) -> Polynomial:
    """s_lam = det(h_{lam_i - i + j})."""
    lam = partition(lam)
    size = len(lam)
    hs = {}

    def hk(k):
        if k not in hs:
            hs[k] = complete(k, variables)
        return hs[k]

    return _det([[hk(lam[i] - i + j) for j in range(size)] for i in range(size)])


def shifted_shape(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Boxes (row, column) of the shifted diagram, row r starting at column r."""
    return [(r, r + c) for r, part in enumerate(lam) for c in range(part)]


def shifted_tableaux(lam: Sequence[int], letters: int):
    """Marked shifted tableaux with unmarked diagonal, as {box: (letter, marked)}.

    Order 1' < 1 < 2' < 2 < ...; rows and columns weakly increase, an unmarked
    letter appears at most once per column and a marked one at most once per row.
    """
    lam = partition(lam, strict=True)
    boxes = shifted_shape(lam)
    # rank 2k-1 is k', rank 2k is k
    ranks = range(1, 2 * letters + 1)
    filling: dict[tuple[int, int], int] = {}

    def ok(box, rk):
        r, c = box
        if r == c and rk % 2 == 1:
            return False
        left = filling.get((r, c - 1))
        if left is not None and (left > rk or (left == rk and rk % 2 == 1)):
            return False
        up = filling.get((r - 1, c))
        if up is not None and (up > rk or (up == rk and rk % 2 == 0)):
            return False
        return True

    def fill(k):
        if k == len(boxes):
            yield {b: ((rk + 1) // 2, rk % 2 == 1) for b, rk in filling.items()}
            return
        box = boxes[k]
        for rk in ranks:
            if ok(box, rk):
                filling[box] = rk
                yield from fill(k + 1)
                del filling[box]

    yield from fill(0)


def schur_p(lam: Sequence[int], variables: Sequence[Polynomial]) -> Polynomial:
    lam = partition(lam, strict=True)
    if sum(lam) > P_FUNCTION_LIMIT:
        raise SymfuncError(f"|lambda| = {sum(lam)} exceeds the tableau limit {P_FUNCTION_LIMIT}")
    variables = [as_poly(v) for v in variables]
    out = ZERO
    for t in shifted_tableaux(lam, len(variables)):
        term = ONE
        for letter, _ in t.values():
            term = term * variables[letter - 1]
        out += term
    return out


# -- supersymmetry and odd power sums -----------------------------------------------


def is_symmetric(f: Polynomial, variables: Sequence[Polynomial]) -> bool:
    names = [_name(v) for v in variables]
    for a, b in zip(names, names[1:]):
        if substitute(f, {a: var_of(b), b: var_of(a)}) != f:
            return False
    return True


def is_supersymmetric(f: Polynomial, variables: Sequence[Polynomial], probe: str | None = None) -> bool:
    """Symmetric, and f(t, -t, v_3, ...) does not depend on t."""
    if len(variables) < 2:
        return True
    if not is_symmetric(f, variables):
        return False
    names = [_name(v) for v in variables]
    taken = set(names) | set(used_variables(f))
    if probe is None:
        probe = _free_name(taken)
    elif probe in taken:
        raise SymfuncError(f"probe variable {probe} already occurs")
    t = var_of(probe)
    g = substitute(f, {names[0]: t, names[1]: -t})
    return probe not in used_variables(g)


def _free_name(taken: set[str]) -> str:
    for family in FAMILIES:
        for i in range(MAX_INDEX, 0, -1):
            if f"{family}{i}" not in taken:
                return f"{family}{i}"
    raise SymfuncError("no free probe variable")


def var_of(name: str) -> Polynomial:
    return var(name[0], int(name[1:]))


def _name(v: Polynomial) -> str:
    used = used_variables(as_poly(v))
    if len(used) != 1 or as_poly(v) != var_of(next(iter(used))):
        raise SymfuncError(f"{v} is not a single variable")
    return next(iter(used))


def odd_partitions(max_deg: int) -> list[Partition]:
    out = []
    for k in range(max_deg + 1):
        out += partitions(k, parts=range(1, k + 1, 2))
    return out


def power_product(lam: Partition, variables: Sequence[Polynomial], cache: dict | None = None) -> Polynomial:
    cache = {} if cache is None else cache
    out = ONE
    for k in lam:
        if k not in cache:
            cache[k] = power_sum(k, variables)
        out = out * cache[k]
    return out


def odd_power_sum_expand(f: Polynomial, variables: Sequence[Polynomial], max_deg: int | None = None) -> OddExpansion:
    """Coefficients c with f = sum_lam c_lam p_lam over odd partitions.

    Solved as a linear system over monomials; raises NotSupersymmetric when f
    is not in the span.  With few variables the products p_lam can be
    dependent, in which case free coefficients are set to zero.
    """
    f = as_poly(f)
    if max_deg is None:
        max_deg = f.total_degree() if not f.is_zero() else 0
    if not is_supersymmetric(f, variables):
        raise NotSupersymmetric("input fails the t, -t cancellation test")
    basis = odd_partitions(max_deg)
    cache: dict = {}
    columns = [power_product(lam, variables, cache).to_dict() for lam in basis]
    target = f.to_dict()
    monomials = sorted(set(target).union(*columns))
    rows, cols = len(monomials), len(basis)
    entries = []
    for mono in monomials:
        entries += [col.get(mono, 0) for col in columns] + [target.get(mono, 0)]
    reduced, rank = flint.fmpq_mat(rows, cols + 1, entries).rref()
    solution = {}
    for r in range(rank):
        pivot = next(c for c in range(cols + 1) if reduced[r, c] != 0)
        if pivot == cols:
            raise NotSupersymmetric("input is not a polynomial in the odd power sums up to the given degree")
        solution[basis[pivot]] = reduced[r, cols]
    return {lam: c for lam, c in sorted(solution.items()) if c != 0}


def evaluate_expansion(expansion: Mapping[Partition, flint.fmpq], variables: Sequence[Polynomial], factor=1) -> Polynomial:
    """sum c_lam prod (factor * p_k(variables))."""
    factor = flint.fmpq(factor)
    cache: dict = {}
    out = ZERO
    for lam, c in expansion.items():
        out += power_product(lam, variables, cache) * (c * factor ** len(lam))
    return out


def halve_and_substitute(
    f: Polynomial, source: Sequence[Polynomial], target: Sequence[Polynomial], factor=flint.fmpq(1, 2)
) -> Polynomial:
    """Rewrite f(source) through p_k(source) -> factor * p_k(target), k odd."""
    return evaluate_expansion(odd_power_sum_expand(f, source), target, factor)


def format_expansion(expansion: Mapping[Partition, flint.fmpq]) -> str:
    if not expansion:
        return "0"
    terms = []
    for lam, c in expansion.items():
        mono = "*".join(f"p{k}" for k in lam) or "1"
        terms.append(f"{c}*{mono}" if lam else f"{c}")
    return " + ".join(terms)


def p_expansion(f: Polynomial, variables: Sequence[Polynomial], shapes: Sequence[Partition]) -> dict[Partition, flint.fmpq]:
    """Coefficients of f in the given Schur P-polynomials (linear solve)."""
    columns = [schur_p(lam, variables).to_dict() for lam in shapes]
    target = as_poly(f).to_dict()
    monomials = sorted(set(target).union(*columns))
    entries = []
    for mono in monomials:
        entries += [col.get(mono, 0) for col in columns] + [target.get(mono, 0)]
    cols = len(shapes)
    reduced, rank = flint.fmpq_mat(len(monomials), cols + 1, entries).rref()
    solution = {}
    for r in range(rank):
        pivot = next(c for c in range(cols + 1) if reduced[r, c] != 0)
        if pivot == cols:
            raise SymfuncError("not in the span of the given P-polynomials")
        solution[tuple(shapes[pivot])] = reduced[r, cols]
    return solution


def bialternant(lam: Sequence[int], variables: Sequence[Polynomial]) -> Polynomial:
    """a_{lam + delta} / a_delta, an independent route to the Schur polynomial."""
    n = len(variables)
    lam = tuple(partition(lam)) + (0,) * max(0, n - len(lam))
    if len(lam) > n:
        return ZERO
    variables = [as_poly(v) for v in variables]
    num = _det([[v ** (lam[i] + n - 1 - i) for v in variables] for i in range(n)])
    den = _det([[v ** (n - 1 - i) for v in variables] for i in range(n)])
    q, r = divmod(num, den)
    if not r.is_zero():
        raise PolyError("alternant quotient is not exact")
    return q

