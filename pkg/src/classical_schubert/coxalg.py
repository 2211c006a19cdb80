"""
Nil-Coxeter and Id-Coxeter algebras of the classical Weyl groups.

Both algebras have the basis {u_w : w in W}.  Right multiplication by a
generator is

    Nil:  u_w u_i = u_{w s_i} if l(w s_i) > l(w), else 0
    Id:   u_w u_i = u_{w s_i} if l(w s_i) > l(w), else beta u_w

Elements are sparse maps from the group index (see ``weyl.weyl_group``) to
:class:`~classical_schubert.poly.Frac` coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import flint
from flint.utils.flint_exceptions import DomainError

from . import weyl
from .poly import BETA, ONE, Frac, FracLike, PolyError, Polynomial, render, to_json
from .weyl import GroupElement, GroupType, WeylGroup


class AlgebraError(ValueError):
    pass


class SqrtError(AlgebraError):
    pass


@dataclass(frozen=True)
class AlgebraKind:
    """``mode`` is "nil" or "id"; in Id mode u_i^2 = (beta_scale * b) u_i."""

    mode: str
    group: GroupType
    beta_scale: int = 1

    def __post_init__(self):
        if self.mode not in ("nil", "id"):
            raise AlgebraError(f"mode must be 'nil' or 'id', got {self.mode!r}")

    @property
    def beta(self) -> Frac:
        return Frac(BETA * self.beta_scale) if self.mode == "id" else Frac(0)

    @property
    def W(self) -> WeylGroup:
        return weyl.weyl_group(self.group)

    def __str__(self):
        name = "Nil" if self.mode == "nil" else ("Id" if self.beta_scale == 1 else f"Id[{self.beta_scale}b]")
        return f"{name}({self.group})"


def nil(group: GroupType) -> AlgebraKind:
    return AlgebraKind("nil", group)


def idc(group: GroupType, beta_scale: int = 1) -> AlgebraKind:
    return AlgebraKind("id", group, beta_scale)


@dataclass(frozen=True)
class HFactor:
    """h_i(c) = 1 + scale * c * u_i; scale 2 is the type C factor h_0^C."""

    generator: int
    argument: Frac
    scale: int = 1

    def __post_init__(self):
        object.__setattr__(self, "argument", Frac.coerce(self.argument))
        if self.scale not in (1, 2):
            raise AlgebraError("h-factor scale must be 1 or 2")
        if self.scale == 2 and self.generator != 0:
            raise AlgebraError("scale 2 is only used with the generator 0")

    @property
    def coeff(self) -> Frac:
        return self.argument if self.scale == 1 else self.argument * 2

    def __str__(self):
        g = weyl.format_word((self.generator,))
        pre = "hC" if self.scale == 2 else "h"
        return f"{pre}_{g}({render(self.argument)})"


def h(i: int, c: FracLike, scale: int = 1) -> HFactor:
    return HFactor(i, Frac.coerce(c), scale)


class AlgebraElement:
    """Finite sum of c_w u_w; treat as immutable."""

    __slots__ = ("kind", "coeffs")

    def __init__(self, kind: AlgebraKind, coeffs: dict[int, Frac] | None = None):
        self.kind = kind
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if not v.is_zero()}

    # -- construction ------------------------------------------------------

    @classmethod
    def one(cls, kind: AlgebraKind) -> AlgebraElement:
        return cls(kind, {0: Frac(ONE)})

    @classmethod
    def zero(cls, kind: AlgebraKind) -> AlgebraElement:
        return cls(kind)

    @classmethod
    def basis(cls, kind: AlgebraKind, w: GroupElement, c: FracLike = 1) -> AlgebraElement:
        return cls(kind, {kind.W.idx(_check_member(kind, w)): Frac.coerce(c)})

    @classmethod
    def generator(cls, kind: AlgebraKind, i: int) -> AlgebraElement:
        return cls.basis(kind, weyl.generator(kind.group, i))

    @classmethod
    def word(cls, kind: AlgebraKind, word: Sequence[int]) -> AlgebraElement:
        """The product u_{a_1} ... u_{a_l} (any word, reduced or not)."""
        out = cls.one(kind)
        for i in word:
            out = out * cls.generator(kind, i)
        return out

    # -- inspection --------------------------------------------------------

    def coefficient(self, w: GroupElement, polynomial: bool = False):
        c = self.coeffs.get(self.kind.W.idx(_check_member(self.kind, w)), Frac(0))
        if polynomial:
            try:
                return c.as_polynomial()
            except PolyError as e:
                raise AlgebraError(f"coefficient of u_[{w}] is not a polynomial: {e}") from None
        return c

    def terms(self) -> Iterator[tuple[GroupElement, Frac]]:
        W = self.kind.W
        for k in sorted(self.coeffs):
            yield W.elements[k], self.coeffs[k]

    def support(self) -> list[GroupElement]:
        W = self.kind.W
        return [W.elements[k] for k in sorted(self.coeffs)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return list(self.coeffs) == [0] and self.coeffs[0].is_one()

    def map_coefficients(self, fn) -> AlgebraElement:
        return AlgebraElement(self.kind, {k: Frac.coerce(fn(v)) for k, v in self.coeffs.items()})

    # -- arithmetic -------------------------------------------------------------

    def _same(self, other: AlgebraElement):
        if other.kind != self.kind:
            raise AlgebraError(f"algebra mismatch: {self.kind} vs {other.kind}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return AlgebraElement(self.kind, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.kind, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: FracLike) -> AlgebraElement:
        c = Frac.coerce(c)
        return AlgebraElement(self.kind, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> AlgebraElement:
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.kind == other.kind and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.coeffs))))

    def __repr__(self):
        return f"<{self.kind}: {format_element(self, limit=6)}>"


def _check_member(kind: AlgebraKind, w: GroupElement) -> GroupElement:
    if w.group.model != kind.group.model or w.group.rank != kind.group.rank:
        raise AlgebraError(f"{w} is not an element of W({kind.group})")
    if w.group != kind.group:
        w = GroupElement(kind.group, w.window)
    return w


# -- products -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _pair_table(kind_mode: str, group: GroupType) -> list[list[tuple[int, int]]]:
    """table[a][b] = (target index, beta exponent) for u_a u_b, target -1 for zero."""
    W = weyl.weyl_group(group)
    dem = W.demazure_table
    L = W.lengths
    out = []
    for a in range(len(W)):
        row = []
        for b in range(len(W)):
            t = dem[a][b]
            e = L[a] + L[b] - L[t]
            if kind_mode == "nil" and e:
                row.append((-1, 0))
            else:
                row.append((t, e))
        out.append(row)
    return out


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product via the closed form u_v u_w = beta^(l(v)+l(w)-l(v*w)) u_(v*w)
    (Demazure product; Nil keeps only length-additive pairs)."""
    a._same(b)
    if a.is_zero() or b.is_zero():
        return AlgebraElement(a.kind)
    table = _pair_table(a.kind.mode, a.kind.group)
    beta = a.kind.beta
    powers = [Frac(ONE)]
    out: dict[int, Frac] = {}
    for i, ci in a.coeffs.items():
        row = table[i]
        for j, cj in b.coeffs.items():
            t, e = row[j]
            if t < 0:
                continue
            c = ci * cj
            if e:
                while len(powers) <= e:
                    powers.append(powers[-1] * beta)
                c = c * powers[e]
            out[t] = out[t] + c if t in out else c
    return AlgebraElement(a.kind, out)


def mul_generator(a: AlgebraElement, i: int, side: str = "right") -> AlgebraElement:
    """a u_i or u_i a."""
    W = a.kind.W
    g = W.gen_pos[i]
    table = W.right if side == "right" else W.left
    L = W.lengths
    beta = a.kind.beta
    out: dict[int, Frac] = {}
    for k, c in a.coeffs.items():
        t = table[k][g]
        if L[t] > L[k]:
            out[t] = out[t] + c if t in out else c
        elif a.kind.mode == "id":
            c = c * beta
            out[k] = out[k] + c if k in out else c
    return AlgebraElement(a.kind, out)


def mul_fold(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product by folding each reduced word of b's support (reference path)."""
    a._same(b)
    W = a.kind.W
    out = AlgebraElement(a.kind)
    for k, c in b.coeffs.items():
        part = a
        for i in W.words[k]:
            part = mul_generator(part, i, "right")
        out = out + part.scale(c)
    return out


def h_mul(a: AlgebraElement, f: HFactor, side: str = "right") -> AlgebraElement:
    """a h_i(c) (side="right") or h_i(c) a (side="left")."""
    W = a.kind.W
    g = W.gen_pos.get(f.generator)
    if g is None:
        raise AlgebraError(f"generator {f.generator} not in W({a.kind.group})")
    c = f.coeff
    if c.is_zero():
        return a
    table = W.right if side == "right" else W.left
    L = W.lengths
    idmode = a.kind.mode == "id"
    cb = c * a.kind.beta if idmode else None
    out = dict(a.coeffs)
    for k, v in a.coeffs.items():
        t = table[k][g]
        if L[t] > L[k]:
            add = v * c
            out[t] = out[t] + add if t in out else add
        elif idmode:
            out[k] = out[k] + v * cb
    return AlgebraElement(a.kind, out)


def product_of_factors(factors: Iterable[HFactor], kind: AlgebraKind) -> AlgebraElement:
    """Ordered product of h-factors.

    Works fraction-free: with c_k = p_k / q_k the product of (q_k + p_k u_i)
    is accumulated with polynomial coefficients and divided by prod q_k once
    at the end, so no gcd is taken per step.
    """
    W = kind.W
    right, L = W.right, W.lengths
    idmode = kind.mode == "id"
    beta = kind.beta.num
    coeffs: dict[int, Polynomial] = {0: ONE}
    den_factors: list[list] = []
    den_scalar = ONE
    for f in factors:
        g = W.gen_pos.get(f.generator)
        if g is None:
            raise AlgebraError(f"generator {f.generator} not in W({kind.group})")
        c = f.coeff
        if c.is_zero():
            continue
        p, q = c.num, c.den
        scaled = q != ONE
        out = {k: v * q for k, v in coeffs.items()} if scaled else dict(coeffs)
        pb = p * beta if idmode else None
        for k, v in coeffs.items():
            t = right[k][g]
            if L[t] > L[k]:
                add = v * p
                out[t] = out[t] + add if t in out else add
            elif idmode:
                out[k] = out[k] + v * pb
        coeffs = {k: v for k, v in out.items() if v != 0}
        if scaled:
            den_scalar = den_scalar * _add_factors(den_factors, q)
    if den_scalar != ONE:
        coeffs = {k: v / den_scalar for k, v in coeffs.items()}
    if not den_factors:
        return AlgebraElement(kind, {k: Frac(v) for k, v in coeffs.items()})
    return AlgebraElement(kind, {k: Frac.over_factors(v, den_factors) for k, v in coeffs.items()})


def _add_factors(acc: list[list], q: Polynomial) -> Polynomial:
    """Accumulate the monic irreducible factors of q as [factor, multiplicity];
    returns the leftover constant."""
    scalar, parts = q.factor()
    scalar = q.context().constant(scalar)
    for f, m in parts:
        lc = f.leading_coefficient()
        scalar = scalar * lc**m
        f = f / lc
        for entry in acc:
            if entry[0] == f:
                entry[1] += m
                break
        else:
            acc.append([f, m])
    return scalar


def invert_factor(f: HFactor, kind: AlgebraKind) -> HFactor:
    """h_i(c)^-1 = h_i(-c) in Nil, h_i(-c / (1 + beta c)) in Id."""
    c = f.coeff
    if kind.mode == "nil":
        inv = -c
    else:
        inv = -c / (c * kind.beta + 1)
    return HFactor(f.generator, inv if f.scale == 1 else inv / 2, f.scale)


def invert_factored(factors: Sequence[HFactor], kind: AlgebraKind, check: bool = True) -> AlgebraElement:
    factors = list(factors)
    inverse = inverse_factors(factors, kind)
    out = product_of_factors(inverse, kind)
    if check and not product_of_factors(factors + inverse, kind).is_one():
        raise AlgebraError("invert_factored: product times inverse is not 1")
    return out


def inverse_factors(factors: Sequence[HFactor], kind: AlgebraKind) -> list[HFactor]:
    return [invert_factor(f, kind) for f in reversed(list(factors))]


def power(a: AlgebraElement, k: int) -> AlgebraElement:
    out = AlgebraElement.one(a.kind)
    for _ in range(k):
        out = out * a
    return out


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


# -- square roots ---------------------------------------------------------------


def sqrt(hh: AlgebraElement, check: bool = True) -> AlgebraElement:
    """The square root with identity coefficient 1.

    Nil: binomial series sum_k C(1/2, k) N^k with N = h - 1, which terminates
    because products of more than l(w_0) generators vanish.
    Id: graded solve over Q(b, x, ...), see :func:`sqrt_graded`.
    """
    if hh.coeffs.get(0) is None or not hh.coeffs[0].is_one():
        raise SqrtError("square root needs identity coefficient 1")
    if hh.kind.mode == "nil":
        root = _sqrt_binomial(hh)
    else:
        bad = character_obstruction(hh)
        if bad is not None:
            i, value = bad
            raise SqrtError(
                "no square root in the rational function field: the character "
                f"u_{weyl.format_word((i,))} -> b, other generators -> 0 takes the non-square value {value}"
            )
        root = sqrt_graded(hh)
    if check and root * root != hh:
        raise SqrtError("square root check S*S == h failed")
    return root


def character(hh: AlgebraElement, subset: Iterable[int]) -> Frac:
    """Image under the algebra character u_i -> beta (i in subset), u_i -> 0
    otherwise; it is multiplicative because every relation is homogeneous in
    each generator up to u_i^2 = beta u_i."""
    W = hh.kind.W
    subset = set(subset)
    beta = hh.kind.beta
    out = Frac(0)
    for k, c in hh.coeffs.items():
        word = W.words[k]
        if all(a in subset for a in word):
            out = out + c * beta ** len(word)
    return out


def character_obstruction(hh: AlgebraElement) -> tuple[int, Frac] | None:
    """A generator whose one-letter character value is not a square, which
    rules out any square root over Q(b, x, ...); None if there is no such
    generator (Id mode only)."""
    if hh.kind.mode != "id":
        return None
    for i in hh.kind.group.generators:
        value = character(hh, (i,))
        if _frac_sqrt(value) is None:
            return i, value
    return None


def _sqrt_binomial(hh: AlgebraElement) -> AlgebraElement:
    N = hh - AlgebraElement.one(hh.kind)
    out = AlgebraElement.one(hh.kind)
    term = AlgebraElement.one(hh.kind)
    coeff = flint.fmpq(1)
    k = 0
    while True:
        term = term * N
        if term.is_zero():
            return out
        coeff = coeff * (flint.fmpq(1, 2) - k) / (k + 1)
        k += 1
        out = out + term.scale(coeff)


@lru_cache(maxsize=None)
def _by_target(kind_mode: str, group: GroupType):
    """For each w: the pairs (a, b, e) with u_a u_b = beta^e u_w."""
    table = _pair_table(kind_mode, group)
    out: list[list[tuple[int, int, int]]] = [[] for _ in table]
    for a, row in enumerate(table):
        for b, (t, e) in enumerate(row):
            if t >= 0:
                out[t].append((a, b, e))
    return out


def sqrt_graded(hh: AlgebraElement) -> AlgebraElement:
    """Solve S*S = h coefficient by coefficient in order of length.

    The u_w equation reads  A s_w^2 + B s_w + C = 0  where A = beta^l(w) when
    w*w = w (Demazure), B = 2 + (terms in shorter s_v) and C collects the rest.
    When A != 0 the root regular at b = 0 is taken; it must be rational.
    """
    kind = hh.kind
    if hh.coeffs.get(0) is None or not hh.coeffs[0].is_one():
        raise SqrtError("square root needs identity coefficient 1")
    W = kind.W
    beta = kind.beta
    targets = _by_target(kind.mode, kind.group)
    s: dict[int, Frac] = {0: Frac(ONE)}
    betapow = [Frac(ONE)]

    def bp(e):
        while len(betapow) <= e:
            betapow.append(betapow[-1] * beta)
        return betapow[e]

    for w in range(1, len(W)):
        A = Frac(0)
        B = Frac(0)
        C = -hh.coeffs.get(w, Frac(0))
        for a, b, e in targets[w]:
            if a == w and b == w:
                A = A + bp(e)
            elif a == w:
                sb = s.get(b)
                if sb is not None:
                    B = B + sb * bp(e)
            elif b == w:
                sa = s.get(a)
                if sa is not None:
                    B = B + sa * bp(e)
            else:
                sa, sb = s.get(a), s.get(b)
                if sa is not None and sb is not None:
                    C = C + sa * sb * bp(e)
        if A.is_zero():
            if B.is_zero():
                raise SqrtError(f"degenerate equation at u_[{W.elements[w]}]")
            val = -C / B
        else:
            val = _quadratic_root(A, B, C, W.elements[w])
        if not val.is_zero():
            s[w] = val
    return AlgebraElement(kind, s)


def _frac_sqrt(d: Frac) -> Frac | None:
    """A square root of d in Q(vars), or None."""
    try:
        # den is normalized, so num*den is a square iff d is
        r = (d.num * d.den).sqrt()
    except DomainError:
        return None
    return Frac(r, d.den)


def _at_beta_zero(f: Frac) -> Frac:
    from .poly import substitute

    return Frac.coerce(substitute(f, {"b": 0}))


def _quadratic_root(A: Frac, B: Frac, C: Frac, w: GroupElement) -> Frac:
    disc = B * B - A * C * 4
    r = _frac_sqrt(disc)
    if r is None:
        raise SqrtError(
            f"no square root in the rational function field: the u_[{w}] equation has "
            f"non-square discriminant {render(disc)}"
        )
    b0 = _at_beta_zero(B)
    for sign in (1, -1):
        if _at_beta_zero(r * sign) == b0:
            return (r * sign - B) / (A * 2)
    raise SqrtError(f"no root regular at b = 0 for u_[{w}]")


# -- output -------------------------------------------------------------------------


def format_element(a: AlgebraElement, limit: int | None = None) -> str:
    parts = []
    for w, c in a.terms():
        word = weyl.format_word(weyl.reduced_word(w)) or "id"
        parts.append(f"({render(c)})*u[{word}]")
        if limit and len(parts) >= limit:
            parts.append("...")
            break
    return " + ".join(parts) if parts else "0"


def to_json_rows(a: AlgebraElement) -> list[dict]:
    return [
        {
            "word": weyl.format_word(weyl.reduced_word(w)),
            "window": weyl.format_window(w.window),
            "coeff": to_json(c),
        }
        for w, c in a.terms()
    ]
