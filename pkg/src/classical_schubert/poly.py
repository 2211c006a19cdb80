"""
Exact polynomials and rational functions over Q in the variable families
x, y, z, t (indices 1..MAX_INDEX) and the parameter beta (written ``b``).

Polynomials are ``flint.fmpq_mpoly`` values in one shared ring; :class:`Frac`
is a normalized numerator/denominator pair on top of it.  The module also
holds the divided difference and isobaric divided difference operators and
the deformed addition ``x (+)_b y = x + y + b x y``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

import flint

FAMILIES = ("x", "y", "z", "t")
MAX_INDEX = 16

_NAMES = tuple(f"{f}{i}" for f in FAMILIES for i in range(1, MAX_INDEX + 1)) + ("b",)
RING = flint.fmpq_mpoly_ctx.get(_NAMES, "deglex")
_GENS = RING.gens()
_POS = {name: k for k, name in enumerate(_NAMES)}
NVARS = len(_NAMES)

Polynomial = flint.fmpq_mpoly
Scalar = Union[int, Fraction, flint.fmpq]


class PolyError(ArithmeticError):
    pass


def var(family: str, index: int | None = None) -> Polynomial:
    if family in ("b", "beta"):
        if index is not None:
            raise PolyError("beta carries no index")
        return _GENS[-1]
    if family not in FAMILIES:
        raise PolyError(f"unknown variable family {family!r}")
    if index is None or not 1 <= index <= MAX_INDEX:
        raise PolyError(f"variable index {index} out of range 1..{MAX_INDEX}")
    return _GENS[_POS[f"{family}{index}"]]


def variables(family: str, n: int, start: int = 1) -> list[Polynomial]:
    return [var(family, i) for i in range(start, start + n)]


BETA = _GENS[-1]
ZERO = RING.constant(0)
ONE = RING.constant(1)


def const(c: Scalar) -> Polynomial:
    if isinstance(c, Fraction):
        c = flint.fmpq(c.numerator, c.denominator)
    return RING.constant(c)


def as_poly(value) -> Polynomial:
    if isinstance(value, flint.fmpq_mpoly):
        return value
    if isinstance(value, Frac):
        return value.as_polynomial()
    return const(value)


def _normalize_den(num: Polynomial, den: Polynomial, reduced: bool = False) -> tuple[Polynomial, Polynomial]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if not den.is_constant() and not reduced:
        g = num.gcd(den)
        if not g.is_constant():
            num = num / g
            den = den / g
    monoms = den.monoms()
    c = den.coeffs()[-1] if not any(monoms[-1]) else den.leading_coefficient()
    if c != 1:
        num = num / c
        den = den / c
    return num, den


class Frac:
    """Element of Q(x, y, z, t, b) kept in lowest terms.

    The denominator has constant term 1 when it has a constant term at all,
    otherwise leading coefficient 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, *, normalized: bool = False):
        num = as_poly(num)
        if den is None:
            self.num, self.den = num, ONE
            return
        den = as_poly(den)
        if normalized:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize_den(num, den)

    @classmethod
    def over_factors(cls, num: Polynomial, factors: Iterable) -> Frac:
        """num / prod(f^m) over (f, m) pairs of distinct irreducible f,
        cancelled by trial division instead of a full gcd."""
        if num.is_zero():
            return cls(ZERO)
        den = ONE
        for f, m in factors:
            while m:
                q, r = divmod(num, f)
                if r != 0:
                    break
                num, m = q, m - 1
            if m:
                den = den * f**m
        return cls(*_normalize_den(num, den, reduced=True), normalized=True)

    @classmethod
    def coerce(cls, value) -> Frac:
        return value if isinstance(value, Frac) else cls(value)

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def as_polynomial(self) -> Polynomial:
        if not self.den.is_one():
            raise PolyError(f"expected a polynomial, got denominator {render(self.den)}")
        return self.num

    def __add__(self, other):
        other = Frac.coerce(other)
        if self.den.is_one() and other.den.is_one():
            return Frac(self.num + other.num, ONE, normalized=True)
        if self.den == other.den:
            return _over_den(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        a, b = self.den / g, other.den / g
        return _over_den(self.num * b + other.num * a, self.den * b)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        return self + (-Frac.coerce(other))

    def __rsub__(self, other):
        return Frac.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Frac):
            p = as_poly(other)
            if self.den.is_one():
                return Frac(self.num * p, ONE, normalized=True)
            other = Frac(p, ONE, normalized=True)
        if self.den.is_one() and other.den.is_one():
            return Frac(self.num * other.num, ONE, normalized=True)
        return Frac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> Frac:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Frac(self.den, self.num)

    def __truediv__(self, other):
        return self * Frac.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Frac.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Frac(self.num**k, self.den**k, normalized=True)

    def __eq__(self, other):
        if not isinstance(other, Frac):
            try:
                other = Frac(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def compose(self, images: list) -> Frac:
        """Apply a ring substitution given polynomial images of all generators."""
        num = self.num.compose(*images) if not self.num.is_constant() else self.num
        if self.den.is_one():
            return Frac(num, ONE, normalized=True)
        den = self.den.compose(*images) if not self.den.is_constant() else self.den
        return Frac(num, den)

    def normalize(self) -> Frac:
        return Frac(self.num, self.den)

    def __repr__(self):
        return f"Frac({render(self)})"

    def __str__(self):
        return render(self)


FracLike = Union[Frac, Polynomial, Scalar]


def _over_den(num: Polynomial, den: Polynomial) -> Frac:
    # numerators can be far larger than denominators; trial division by the
    # factors of den is much cheaper than a full gcd
    if den.is_constant():
        return Frac(num / den, ONE, normalized=True) if not num.is_zero() else Frac(ZERO)
    c, factors = den.factor()
    return Frac.over_factors(num / c, factors)


# -- substitution -----------------------------------------------------------------


def _key(v) -> str:
    if isinstance(v, str):
        if v == "beta":
            return "b"
        if v not in _POS:
            raise PolyError(f"unknown variable {v!r}")
        return v
    if isinstance(v, tuple):
        family, index = v
        return "b" if family in ("b", "beta") else f"{family}{index}"
    if isinstance(v, flint.fmpq_mpoly):
        for name, g in zip(_NAMES, _GENS):
            if g == v:
                return name
    raise PolyError(f"cannot interpret {v!r} as a variable")


def _apply(f, images: list):
    if isinstance(f, Frac):
        return f.compose(images)
    f = as_poly(f)
    return f if f.is_constant() else f.compose(*images)


def substitute(f: FracLike, bindings: Mapping) -> FracLike:
    """Simultaneous substitution of variables by polynomials or fractions.

    Keys are variable names ("x1", "b"), (family, index) pairs or generators.
    Polynomial input with polynomial bindings stays a Polynomial.
    """
    bind = {_POS[_key(k)]: Frac.coerce(v) for k, v in bindings.items()}
    if all(v.is_polynomial() for v in bind.values()):
        images = list(_GENS)
        for pos, v in bind.items():
            images[pos] = v.num
        return _apply(f, images)
    frac = Frac.coerce(f)
    num, den = _subs_poly(frac.num, frac.den, bind)
    if den.is_zero():
        raise PolyError("substitution makes the denominator vanish")
    return Frac(num, den)


def _subs_poly(num: Polynomial, den: Polynomial, bind: dict[int, Frac]):
    # clear each bound variable's denominator up to its top degree in num and den
    tops = {}
    for pos in bind:
        d = 0
        for p in (num, den):
            if not p.is_zero():
                d = max(d, p.degrees()[pos])
        tops[pos] = d
    images = list(_GENS)
    for pos in bind:
        images[pos] = ONE

    def clear(p: Polynomial) -> Polynomial:
        out = ZERO
        cache = {}
        for monom, coeff in p.terms():
            term = RING.term(coeff, tuple(0 if k in bind else e for k, e in enumerate(monom)))
            for pos, v in bind.items():
                e = monom[pos]
                key = (pos, e)
                if key not in cache:
                    cache[key] = v.num**e * v.den ** (tops[pos] - e)
                term = term * cache[key]
            out += term
        return out

    return clear(num), clear(den)


def permute_variables(f: FracLike, family: str, window) -> FracLike:
    """Send family_i to sign(w(i)) * family_|w(i)| for the signed window w."""
    images = list(_GENS)
    for i, v in enumerate(window, start=1):
        g = var(family, abs(v))
        images[_POS[f"{family}{i}"]] = g if v > 0 else -g
    return _apply(f, images)


def negate_family(f: FracLike, family: str) -> FracLike:
    images = list(_GENS)
    for i in range(1, MAX_INDEX + 1):
        images[_POS[f"{family}{i}"]] = -var(family, i)
    return _apply(f, images)


def rename_family(f: FracLike, source: str, target: str) -> FracLike:
    images = list(_GENS)
    for i in range(1, MAX_INDEX + 1):
        images[_POS[f"{source}{i}"]] = var(target, i)
        images[_POS[f"{target}{i}"]] = var(source, i)
    return _apply(f, images)


# -- deformed addition and phi ------------------------------------------------------


def beta_add(a: FracLike, b: FracLike, beta=BETA) -> Frac:
    """a (+)_b b = a + b + beta a b."""
    a, b = Frac.coerce(a), Frac.coerce(b)
    return a + b + a * b * beta


def beta_sub(a: FracLike, b: FracLike, beta=BETA) -> Frac:
    """a (-)_b b = (a - b) / (1 + beta b), the inverse of beta_add in its second slot."""
    a, b = Frac.coerce(a), Frac.coerce(b)
    return (a - b) / (b * beta + 1)


def phi(f: FracLike, scale: int = 1) -> Frac:
    """f / (1 - (b/2) f) for scale 1, f / (1 - b f) for scale 2."""
    if scale not in (1, 2):
        raise PolyError(f"phi scale must be 1 or 2, got {scale}")
    f = Frac.coerce(f)
    c = flint.fmpq(1, 2) if scale == 1 else 1
    return f / (1 - f * (BETA * c))


# -- divided differences ----------------------------------------------------------


def _reflection(family: str, i: int):
    """Generator images for the simple reflection i acting on one family."""
    images = list(_GENS)
    if i == 0:
        images[_POS[f"{family}1"]] = -var(family, 1)
    elif i == -1:
        images[_POS[f"{family}1"]] = -var(family, 2)
        images[_POS[f"{family}2"]] = -var(family, 1)
    else:
        images[_POS[f"{family}{i}"]] = var(family, i + 1)
        images[_POS[f"{family}{i + 1}"]] = var(family, i)
    return images


def reflect(f: FracLike, i: int, family: str = "x") -> FracLike:
    return _apply(f, _reflection(family, i))


def _root(i: int, family: str) -> Polynomial:
    if i == 0:
        return var(family, 1)
    if i == -1:
        return var(family, 1) + var(family, 2)
    return var(family, i) - var(family, i + 1)


def _exact_quotient(p: Polynomial, root: Polynomial) -> Polynomial:
    q, r = divmod(p, root)
    if not r.is_zero():
        raise PolyError(f"divided difference left remainder {render(r)}")
    return q


def divided_difference(f: FracLike, i: int, kind: str = "A", family: str = "x") -> FracLike:
    """(f - s_i f) / alpha_i.

    ``i`` is 0 for the B/C node, -1 (HAT) for the D node, i >= 1 otherwise;
    ``kind`` selects the normalization of the special node (C halves the B one).
    """
    if i == 0 and kind not in ("B", "C"):
        raise PolyError("the 0 node exists for types B and C only")
    if i == -1 and kind != "D":
        raise PolyError("the hat node exists for type D only")
    g = reflect(f, i, family)
    root = _root(i, family)
    if isinstance(f, Frac) and not f.is_polynomial():
        out = (f - g) / root
    else:
        out = _exact_quotient(as_poly(f) - as_poly(g), root)
    if i == 0 and kind == "C":
        out = out * flint.fmpq(1, 2)
    return out


def divided_difference_unreduced(f: FracLike, i: int, kind: str = "A", family: str = "x", weight: FracLike = 1) -> Frac:
    """divided_difference(f * weight) as an unreduced fraction, skipping the
    gcd work; compare results with :func:`cross_equal`."""
    f = Frac.coerce(f)
    num, den = f.num * as_poly(weight), f.den
    snum, sden = reflect(num, i, family), reflect(den, i, family)
    out_den = _root(i, family) * den * sden
    if i == 0 and kind == "C":
        out_den = out_den * 2
    return Frac(num * sden - snum * den, out_den, normalized=True)


def cross_equal(a: FracLike, b: FracLike) -> bool:
    """a == b for possibly unreduced fractions."""
    a, b = Frac.coerce(a), Frac.coerce(b)
    return a.num * b.den == b.num * a.den


def isobaric_weight(i: int, kind: str, family: str = "x") -> Polynomial:
    """The factor multiplied in before the divided difference."""
    half = flint.fmpq(1, 2)
    if i >= 1:
        c = 1 if kind in ("A", "C") else half
        return 1 + BETA * c * var(family, i + 1)
    if i == 0:
        c = half if kind == "B" else 1
        return 1 - BETA * c * var(family, 1)
    return (1 - BETA * half * var(family, 1)) * (1 - BETA * half * var(family, 2))


def isobaric(f: FracLike, i: int, kind: str = "A", family: str = "x") -> FracLike:
    weight = isobaric_weight(i, kind, family)
    if isinstance(f, Frac):
        return divided_difference(f * weight, i, kind, family)
    return divided_difference(as_poly(f) * weight, i, kind, family)


def isobaric_eigenvalue(i: int, kind: str):
    """c with pi_i(pi_i f) = -c pi_i f."""
    half = flint.fmpq(1, 2)
    if i >= 1:
        return BETA if kind in ("A", "C") else BETA * half
    # the type C node: (1/2) d_0((1 - b x_1) f) squares to -b, not -2b
    return BETA


# -- inspection / formatting ----------------------------------------------------------


def degree_in(f: Polynomial, families: Iterable[str]) -> set[int]:
    """Set of total degrees of the terms of f counted in the given families."""
    positions = [_POS[f"{fam}{i}"] for fam in families for i in range(1, MAX_INDEX + 1)]
    return {sum(m[p] for p in positions) for m in f.monoms()}


def used_variables(f: FracLike) -> set[str]:
    polys = [f.num, f.den] if isinstance(f, Frac) else [as_poly(f)]
    names = set()
    for p in polys:
        for m in p.monoms():
            names.update(_NAMES[k] for k, e in enumerate(m) if e)
    return names


def coefficients(f: Polynomial) -> list:
    return list(f.coeffs())


def _render_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for monom, coeff in p.terms():
        factors = []
        for k, e in enumerate(monom):
            if e:
                factors.append(_NAMES[k] if e == 1 else f"{_NAMES[k]}^{e}")
        neg = coeff < 0
        c = -coeff if neg else coeff
        if not factors:
            body = str(c)
        elif c == 1:
            body = "*".join(factors)
        else:
            body = f"{c}*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def render(f: FracLike) -> str:
    """Canonical text, e.g. ``3/2*x1^2*y2*b``; fractions as ``(num)/(den)``."""
    if isinstance(f, Frac):
        if f.is_polynomial():
            return _render_poly(f.num)
        return f"({_render_poly(f.num)})/({_render_poly(f.den)})"
    return _render_poly(as_poly(f))


def to_json(f: FracLike) -> list[dict]:
    """Term list [{"mono": {"x1": 2, "b": 1}, "num": "3", "den": "2"}, ...]."""
    p = Frac.coerce(f).as_polynomial()
    out = []
    for monom, coeff in p.terms():
        mono = {_NAMES[k]: int(e) for k, e in enumerate(monom) if e}
        out.append({"mono": mono, "num": str(coeff.p), "den": str(coeff.q)})
    return out


def from_json(terms: list[dict]) -> Polynomial:
    out = ZERO
    for t in terms:
        exps = [0] * NVARS
        for name, e in t["mono"].items():
            if name not in _POS:
                raise PolyError(f"unknown variable {name!r}")
            exps[_POS[name]] = int(e)
        out += RING.term(flint.fmpq(int(t["num"]), int(t["den"])), tuple(exps))
    return out


def parse(text: str) -> Polynomial:
    """Parse polynomial text in the rendering format (also accepts ``**``)."""
    import ast

    env = {name: g for name, g in zip(_NAMES, _GENS)}
    env["beta"] = BETA
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if isinstance(b, flint.fmpq_mpoly):
                    if not b.is_constant():
                        raise PolyError("division by a non-constant")
                    b = b.coefficient(0)
                if isinstance(a, int) and isinstance(b, int):
                    return flint.fmpq(a, b)
                return a / b
            if isinstance(node.op, ast.Pow):
                if not isinstance(b, int):
                    raise PolyError("exponents must be integers")
                return a**b
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        raise PolyError(f"cannot parse {text!r}")

    return as_poly(ev(tree))
