"""
Generating expressions (transfer-matrix products) and their decomposition
into polynomial families.

An expression is kept as a :class:`Recipe`: a list of segments that are
either plain h-factor runs, a square root of an h-factor product, or a
generic algebra element (the tilde elements).  Factored runs can be
inverted factor by factor, which is how every double expression is formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import coxalg, weyl
from .coxalg import AlgebraElement, AlgebraKind, HFactor, h, idc, nil
from .poly import Frac, FracLike, Polynomial, beta_add, beta_sub, phi, var
from .weyl import HAT, GroupElement, GroupType

FLAVORS = ("schubert", "grothendieck")
KINDS = ("first", "second", "third")
ARITIES = ("single", "double", "triple")


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class ExpressionSpec:
    group: GroupType
    flavor: str = "schubert"
    kind: str = "first"
    arity: str = "single"
    m: int | None = None

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ExpressionError(f"flavor must be one of {FLAVORS}")
        if self.kind not in KINDS:
            raise ExpressionError(f"kind must be one of {KINDS}")
        if self.arity not in ARITIES:
            raise ExpressionError(f"arity must be one of {ARITIES}")
        tag = self.group.tag
        if self.kind == "third" and (self.flavor != "schubert" or tag != "C" or self.arity != "single"):
            raise ExpressionError("third-kind expressions exist for single type C Schubert only")
        if self.kind == "second" and tag == "A":
            raise ExpressionError("type A has no second-kind expression")
        if self.arity == "triple":
            if tag == "A":
                raise ExpressionError("triple expressions are defined for types B, C, D")
            if self.kind != "first":
                raise ExpressionError("triple expressions have no kind other than 'first'")
        elif self.m is not None:
            raise ExpressionError("m is only used by triple expressions")

    @property
    def z_count(self) -> int:
        return self.m if self.m is not None else self.group.rank

    @property
    def mode(self) -> str:
        return "nil" if self.flavor == "schubert" else "id"

    @property
    def algebra(self) -> AlgebraKind:
        return AlgebraKind(self.mode, self.group)

    def with_group(self, group: GroupType) -> ExpressionSpec:
        return ExpressionSpec(group, self.flavor, self.kind, self.arity, self.m)

    def with_flavor(self, flavor: str) -> ExpressionSpec:
        return ExpressionSpec(self.group, flavor, self.kind, self.arity, self.m)

    def label(self) -> str:
        extra = f" m={self.z_count}" if self.arity == "triple" else ""
        return f"{self.flavor} {self.kind} {self.arity} {self.group}{extra}"


# -- transfer elements ------------------------------------------------------------


def a_factors(i: int, c: FracLike, n: int) -> list[HFactor]:
    """A_i(c) = h_{n-1}(c) h_{n-2}(c) ... h_i(c)."""
    return [h(a, c) for a in range(n - 1, i - 1, -1)]


def a_inverse_factors(i: int, c: FracLike, n: int, mode: str = "nil") -> list[HFactor]:
    return coxalg.inverse_factors(a_factors(i, c, n), AlgebraKind(mode, GroupType("A", max(n, 1))))


def _deform(c: FracLike, scale: int | None) -> Frac:
    return Frac.coerce(c) if scale is None else phi(c, scale)


def transfer_factors(symbol: str, c: FracLike, group: GroupType) -> list[HFactor]:
    """Factored form of A_i / B / C / D and the calligraphic calB / calC / calD.

    B(x) = h_{n-1}(x)..h_1(x) h_0(x) h_1(x)..h_{n-1}(x)
    C(x) = same with h_0(2x) in the middle
    D(x) = h_{n-1}(x)..h_1(x) h_hat(x) h_2(x)..h_{n-1}(x)
    calB(x) = B(phi(x)), calD(x) = D(phi(x)), calC(x) uses phi_2b(x) and h_0(phi_2b(2x)).
    """
    n = group.rank
    model = group.model
    if symbol.startswith("A"):
        i = int(symbol[1:] or 1)
        if not 1 <= i <= n:
            raise ExpressionError(f"A_{i} needs 1 <= i <= {n}")
        return a_factors(i, c, n)
    down = range(n - 1, 0, -1)
    if symbol in ("B", "calB", "C", "calC"):
        if model != "B":
            raise ExpressionError(f"{symbol} lives in type B/C algebras, not {group}")
        if symbol == "B":
            arg, mid = Frac.coerce(c), h(0, c)
        elif symbol == "C":
            arg, mid = Frac.coerce(c), h(0, c, scale=2)
        elif symbol == "calB":
            arg = phi(c, 1)
            mid = h(0, arg)
        else:
            arg = phi(c, 2)
            mid = h(0, phi(Frac.coerce(c) * 2, 2))
        return [h(a, arg) for a in down] + [mid] + [h(a, arg) for a in range(1, n)]
    if symbol in ("D", "calD"):
        if model != "D":
            raise ExpressionError(f"{symbol} lives in type D algebras, not {group}")
        arg = Frac.coerce(c) if symbol == "D" else phi(c, 1)
        return [h(a, arg) for a in down] + [h(HAT, arg)] + [h(a, arg) for a in range(2, n)]
    raise ExpressionError(f"unknown transfer symbol {symbol!r}")


def transfer(symbol: str, c: FracLike, group: GroupType, mode: str | None = None) -> AlgebraElement:
    """The named element expanded; plain and tilde symbols in Nil, calligraphic in Id.

    Tilde symbols: tB = 1 + B, tC = (1 + C)/2, tD = 1 + D.
    """
    if symbol in ("tB", "tC", "tD"):
        base = transfer(symbol[1:], c, group, mode or "nil")
        one = AlgebraElement.one(base.kind)
        return (one + base).scale(Frac(1) / 2) if symbol == "tC" else one + base
    if mode is None:
        mode = "id" if symbol.startswith("cal") else "nil"
    return coxalg.product_of_factors(transfer_factors(symbol, c, group), AlgebraKind(mode, group))


def transfer_symbol(group: GroupType, flavor: str) -> str:
    if group.model == "A":
        return "A1"
    base = group.tag
    return base if flavor == "schubert" else "cal" + base


def schubert_a_factors(args: Sequence[FracLike], n: int) -> list[HFactor]:
    """S^A(c_1, ..., c_{n-1}) = A_1(c_1) A_2(c_2) ... A_{n-1}(c_{n-1})."""
    out = []
    for i in range(1, n):
        out += a_factors(i, args[i - 1], n)
    return out


# -- recipes -------------------------------------------------------------------------


@dataclass
class Recipe:
    """Product of segments: ("factors", [HFactor]), ("sqrt", [HFactor]) or ("element", AlgebraElement)."""

    kind: AlgebraKind
    segments: list[tuple[str, object]] = field(default_factory=list)

    def factors(self, fs: Sequence[HFactor]) -> Recipe:
        if self.segments and self.segments[-1][0] == "factors":
            self.segments[-1] = ("factors", list(self.segments[-1][1]) + list(fs))
        else:
            self.segments.append(("factors", list(fs)))
        return self

    def radical(self, fs: Sequence[HFactor]) -> Recipe:
        self.segments.append(("sqrt", list(fs)))
        return self

    def element(self, e: AlgebraElement) -> Recipe:
        self.segments.append(("element", e))
        return self

    def then(self, other: Recipe) -> Recipe:
        for seg in other.segments:
            if seg[0] == "factors":
                self.factors(seg[1])
            else:
                self.segments.append(seg)
        return self

    def is_factored(self) -> bool:
        return all(tag == "factors" for tag, _ in self.segments)

    def all_factors(self) -> list[HFactor]:
        if not self.is_factored():
            raise ExpressionError("recipe has non-factored segments")
        return [f for _, fs in self.segments for f in fs]

    def inverse(self) -> Recipe:
        """Inverse; square roots become square roots of the inverted radicand."""
        out = Recipe(self.kind)
        for tag, payload in reversed(self.segments):
            if tag == "factors":
                out.factors(coxalg.inverse_factors(payload, self.kind))
            elif tag == "sqrt":
                out.radical(coxalg.inverse_factors(payload, self.kind))
            else:
                raise ExpressionError("generic elements are not inverted")
        return out

    def evaluate(self) -> AlgebraElement:
        out = None
        for tag, payload in self.segments:
            if tag == "factors":
                part = coxalg.product_of_factors(payload, self.kind)
            elif tag == "sqrt":
                part = radical(self.kind, tuple(payload))
            else:
                part = payload
            out = part if out is None else out * part
        return AlgebraElement.one(self.kind) if out is None else out


@lru_cache(maxsize=256)
def radical(kind: AlgebraKind, factors: tuple[HFactor, ...]) -> AlgebraElement:
    """sqrt of a product of h-factors, cached per factor sequence."""
    return coxalg.sqrt(coxalg.product_of_factors(factors, kind))


def _neg(args):
    return [-Frac.coerce(a) for a in args]


def single_recipe(spec: ExpressionSpec, args: Sequence[FracLike]) -> Recipe:
    """Single expression for ``spec`` evaluated at the argument list (length n)."""
    group = spec.group
    n = group.rank
    kind = spec.algebra
    tag = group.tag
    args = [Frac.coerce(a) for a in args]
    if len(args) != n:
        raise ExpressionError(f"expected {n} arguments, got {len(args)}")
    r = Recipe(kind)
    groth = spec.flavor == "grothendieck"

    if tag == "A":
        return r.factors(schubert_a_factors(args, n))

    # the type A tail S^A(-X), with phi deformation for Grothendieck
    def deformed(c):
        if not groth:
            return c
        return phi(c, 2 if tag == "C" else 1)

    symbol = transfer_symbol(group, spec.flavor)
    if spec.kind == "third":
        for c in args:
            r.element(transfer("tC", c, group, "nil"))
        return r.factors(schubert_a_factors(_neg(args), n))

    if tag == "D" and spec.kind == "first":
        for c in args[: n - 1]:
            r.factors(transfer_factors(symbol, c, group))
        for i in range(2, n):
            r.factors(a_factors(i, deformed(-args[i - 2]), n))
        return r

    transfers = [f for c in args for f in transfer_factors(symbol, c, group)]
    tail = schubert_a_factors([deformed(-c) for c in args], n)
    if spec.kind == "first":
        return r.factors(transfers).factors(tail)
    return r.radical(transfers).factors(tail)


def xs(n: int) -> list[Polynomial]:
    return [var("x", i) for i in range(1, n + 1)]


def ys(n: int) -> list[Polynomial]:
    return [var("y", i) for i in range(1, n + 1)]


def zs(m: int) -> list[Polynomial]:
    return [var("z", i) for i in range(1, m + 1)]


def recipe(spec: ExpressionSpec, X=None, Y=None, Z=None) -> Recipe:
    n = spec.group.rank
    X = xs(n) if X is None else list(X)
    Y = ys(n) if Y is None else list(Y)
    if spec.arity == "single":
        return single_recipe(spec, X)
    if spec.arity == "double":
        left = single_recipe(spec, _neg(Y))
        return left.inverse().then(single_recipe(spec, X))
    Z = zs(spec.z_count) if Z is None else list(Z)
    return triple_recipe(spec, X, Y, Z)


def triple_recipe(spec: ExpressionSpec, X, Y, Z) -> Recipe:
    """(S^A(-Y))^-1 B^W(z_1)...B^W(z_m) S^A(-X), in Nil or (verbatim, plain
    arguments) in Id for the Grothendieck flavor."""
    group = spec.group
    n = group.rank
    kind = spec.algebra
    symbol = group.tag
    left = Recipe(kind).factors(schubert_a_factors(_neg(Y), n)).inverse()
    middle = [f for c in Z for f in transfer_factors(symbol, c, group)]
    return left.factors(middle).factors(schubert_a_factors(_neg(X), n))


def build(spec: ExpressionSpec, X=None, Y=None, Z=None) -> AlgebraElement:
    return recipe(spec, X, Y, Z).evaluate()


def radical_double_recipe(spec: ExpressionSpec, X=None, Y=None) -> Recipe:
    """Double expression with a single radical:

    Schubert:      (S^A(-Y))^-1 sqrt(B(Y) B(-X)) S^A(X)
    Grothendieck:  (S^A(phi(-Y)))^-1 sqrt(calB(Y) calB(X)) S^A(phi(X))
    """
    group = spec.group
    n = group.rank
    kind = spec.algebra
    X = xs(n) if X is None else list(X)
    Y = ys(n) if Y is None else list(Y)
    symbol = transfer_symbol(group, spec.flavor)
    groth = spec.flavor == "grothendieck"
    scale = 2 if group.tag == "C" else 1

    def d(c):
        return phi(c, scale) if groth else Frac.coerce(c)

    left = Recipe(kind).factors(schubert_a_factors([d(-Frac.coerce(c)) for c in Y], n)).inverse()
    xsign = 1 if groth else -1
    radicand = [f for c in Y for f in transfer_factors(symbol, c, group)]
    radicand += [f for c in X for f in transfer_factors(symbol, Frac.coerce(c) * xsign, group)]
    return left.radical(radicand).factors(schubert_a_factors([d(c) for c in X], n))


# -- decomposition ------------------------------------------------------------------------


@dataclass
class PolynomialFamily:
    spec: ExpressionSpec | None
    table: dict[GroupElement, Polynomial]

    def __getitem__(self, w: GroupElement) -> Polynomial:
        return self.table[w]

    def rows(self) -> list[tuple[GroupElement, Polynomial]]:
        return sorted(self.table.items(), key=lambda kv: kv[0].sort_key())

    def __eq__(self, other):
        if not isinstance(other, PolynomialFamily):
            return NotImplemented
        return self.table == other.table


class DecompositionError(ExpressionError):
    pass


def decompose(e: AlgebraElement, spec: ExpressionSpec | None = None, polynomial: bool = True) -> PolynomialFamily:
    """Coefficient table over all of W.

    Asserts the identity coefficient is 1 and (by default) that every
    coefficient is a polynomial; failures name the offending element.
    """
    W = e.kind.W
    table = {}
    for k, w in enumerate(W.elements):
        c = e.coeffs.get(k, Frac(0))
        if polynomial:
            if not c.is_polynomial():
                raise DecompositionError(f"coefficient of u_[{w}] has denominator: {c}")
            table[w] = c.num
        else:
            table[w] = c
    if not Frac.coerce(table[W.elements[0]]).is_one():
        raise DecompositionError(f"identity coefficient is {table[W.elements[0]]}, not 1")
    return PolynomialFamily(spec, table)


def family(spec: ExpressionSpec, polynomial: bool = True) -> PolynomialFamily:
    return decompose(build(spec), spec, polynomial)


def stanley(group: GroupType, mode: str = "nil", m: int | None = None, variables: str = "z") -> PolynomialFamily:
    """Coefficients F_w of W(z_1) ... W(z_m) for the transfer element W of the type
    (A_1 for type A, calligraphic elements in Id mode)."""
    m = group.rank if m is None else m
    if m < 1:
        raise ExpressionError("m must be positive")
    symbol = transfer_symbol(group, "schubert" if mode == "nil" else "grothendieck")
    factors = [f for i in range(1, m + 1) for f in transfer_factors(symbol, var(variables, i), group)]
    e = coxalg.product_of_factors(factors, AlgebraKind(mode, group))
    return decompose(e, None, polynomial=(mode == "nil"))


# -- vanishing and factorization forms -----------------------------------------------------


def _signed_x(i: int) -> Frac:
    return Frac(var("x", abs(i)) if i > 0 else -var("x", abs(i)))


def _node_root_pair(i: int) -> tuple[int, int]:
    """(a, s_a(a)) used by the index rule; the special nodes read as position 1."""
    if i == 0:
        return 1, -1
    if i == HAT:
        return 1, -2
    return i, i + 1


def _simple_root(group: GroupType, a: int) -> list[tuple[int, int]]:
    """Simple root as (coefficient, signed index) pairs: x_1 for s_0 in type B,
    2x_1 in type C, x_1 + x_2 for s_hat, x_{a+1} - x_a otherwise."""
    if a == 0:
        return [(2 if group.tag == "C" else 1, 1)]
    if a == HAT:
        return [(1, 1), (1, 2)]
    return [(1, a + 1), (-1, a)]


def vanishing_factors(
    w: GroupElement, word: Sequence[int], deformed: bool = False, root_convention: str = "index"
) -> list[HFactor]:
    """Factors of prod_{r=l}^{1} h_{a_r}(.) with p = s_{a_1}...s_{a_{r-1}}.

    ``"index"`` is the literal rule x_{p(a)} - x_{p s_a(a)} (special nodes read
    as position 1, so s_0 gives x_1 - x_{-1} = 2 x_1).  ``"root"`` uses p applied
    to the simple root (see :func:`_simple_root`).  With ``deformed`` the
    difference becomes the deformed difference and sums the deformed sum.
    """
    group = w.group
    if weyl.from_word(group, word) != w or len(word) != w.length:
        raise ExpressionError(f"{weyl.format_word(word)} is not a reduced word for {w}")
    if root_convention not in ("index", "root"):
        raise ExpressionError(f"unknown root convention {root_convention!r}")
    out = []
    p = weyl.identity(group)
    for a in word:
        if root_convention == "index":
            i, j = _node_root_pair(a)
            first, second = _signed_x(p(i)), _signed_x(p(j))
            arg = beta_sub(first, second) if deformed else first - second
        else:
            terms = [_signed_x(p(k)) * c for c, k in _simple_root(group, a)]
            arg = terms[0]
            for t in terms[1:]:
                arg = beta_add(arg, t) if deformed else arg + t
        out.append(h(a, arg))
        p = weyl.apply_generator(p, a, "right")
    return list(reversed(out))


def vanishing_product(w: GroupElement, word: Sequence[int] | None = None, deformed: bool = False, root_convention: str = "index") -> AlgebraElement:
    word = weyl.reduced_word(w) if word is None else tuple(word)
    kind = AlgebraKind("id" if deformed else "nil", w.group)
    return coxalg.product_of_factors(vanishing_factors(w, word, deformed, root_convention), kind)


def minus_w_of_x(w: GroupElement, source: str = "x") -> list[Frac]:
    """The list -w(X) = (-x_{w(1)}, ..., -x_{w(n)}), signed."""
    return [-_signed_x(w(i)) if source == "x" else -Frac(var(source, abs(w(i))) * (1 if w(i) > 0 else -1)) for i in range(1, w.group.rank + 1)]


FACTORIZED_FORMS = (
    "typeB_single",
    "typeD_odd",
    "typeD_even",
    "typeB_double",
    "typeB_specialization",
    "typeA_double",
    "typeC_third",
)


FACTORIZED_TARGETS = {
    "typeB_single": "first-kind single",
    "typeD_odd": "first-kind single",
    "typeD_even": "first-kind single",
    "typeB_double": "first-kind double",
    "typeB_specialization": "S^A(X)^-1 B(x_1)..B(x_n) S^A(-X)",
    "typeA_double": "type A double",
    "typeC_third": "third-kind single",
}


def factorized(form: str, group: GroupType, variant: str = "literal") -> tuple[AlgebraElement, int]:
    """The displayed factored product and its number of h-factors (the
    ``typeC_third`` form is not an h-product; its count is 0).

    ``variant="amended"`` changes two forms whose literal display does not
    reproduce the expression: ``typeB_double`` runs the inner y-product
    with descending j, and ``typeD_even`` uses x_{2r+1} as the second
    summand of its first inner product.
    """
    if variant not in ("literal", "amended"):
        raise ExpressionError(f"unknown variant {variant!r}")
    amended = variant == "amended"
    n = group.rank
    X = xs(n)
    Y = ys(n)
    x = lambda i: Frac(0) if i == 0 else Frac(X[i - 1])  # noqa: E731
    y = lambda i: Frac(0) if i == 0 else Frac(Y[i - 1])  # noqa: E731
    kind = nil(group)

    if form == "typeA_double":
        _need(group, "A")
        fs = [h(i + j - 1, x(i) + y(j)) for i in range(1, n) for j in range(n - i, 0, -1)]
        return coxalg.product_of_factors(fs, kind), len(fs)

    if form == "typeB_single":
        _need(group, "B")
        fs = schubert_a_factors(list(reversed(X)), n)
        for i in range(0, n):
            k = n - i
            fs.append(h(0, x(k)))
            fs += [h(j, x(k - j) + x(k)) for j in range(1, k)]
        return coxalg.product_of_factors(fs, kind), len(fs)

    if form in ("typeD_odd", "typeD_even"):
        _need(group, "D")
        odd = form.endswith("odd")
        if (n % 2 == 1) != odd or (odd and n < 3) or (not odd and n < 4):
            raise ExpressionError(f"{form} does not apply to rank {n}")
        fs = schubert_a_factors(list(reversed(X[: n - 1])), n)
        if odd:
            for r in range(n // 2, 0, -1):
                fs.append(h(HAT, x(2 * r - 1) + x(2 * r)))
                fs += [h(a, x(2 * r - a) + x(2 * r)) for a in range(2, 2 * r + 1)]
                fs += [h(a, x(2 * r - 1 - a) + x(2 * r - 1)) for a in range(1, 2 * r)]
        else:
            for r in range(n // 2 - 1, 0, -1):
                fs.append(h(HAT, x(2 * r) + x(2 * r + 1)))
                last = 2 * r + 1 if amended else 2 * r
                fs += [h(a, x(2 * r + 1 - a) + x(last)) for a in range(2, 2 * r + 2)]
                fs += [h(a, x(2 * r - a) + x(2 * r)) for a in range(1, 2 * r + 1)]
            fs.append(h(HAT, x(1)))
        return coxalg.product_of_factors(fs, kind), len(fs)

    if form == "typeB_double":
        _need(group, "B")
        fs = []
        for i in range(1, n + 1):
            js = range(i - 1, 0, -1) if amended else range(1, i)
            fs += [h(j, y(i - j) + y(i)) for j in js]
            fs.append(h(0, y(i)))
        xo, yo = list(reversed(X)), list(reversed(Y))
        fs += [h(i + j - 1, Frac(xo[i - 1]) + yo[j - 1]) for i in range(1, n) for j in range(n - i, 0, -1)]
        for i in range(n, 0, -1):
            fs.append(h(0, x(i)))
            fs += [h(j, x(i - j) + x(i)) for j in range(1, i)]
        return coxalg.product_of_factors(fs, kind), len(fs)

    if form == "typeB_specialization":
        _need(group, "B")
        fs = []
        for j in range(1, n + 1):
            fs += [h(a, x(a) + x(j)) for a in range(j - 1, 0, -1)]
            fs.append(h(0, x(j)))
            fs += [h(a, x(j) - x(a)) for a in range(1, j)]
        return coxalg.product_of_factors(fs, kind), len(fs)

    if form == "typeC_third":
        if group.tag != "C":
            raise ExpressionError("typeC_third needs type C")
        out = AlgebraElement.one(kind)
        for k in range(2, n + 1):
            out = out * _script_c(X[:k], group)
        return out, 0

    raise ExpressionError(f"unknown factorized form {form!r}")


def _need(group: GroupType, tag: str):
    if group.model != tag:
        raise ExpressionError(f"form needs type {tag}, got {group}")


def _script_c(args: Sequence[Polynomial], group: GroupType) -> AlgebraElement:
    """The product B(x_k) prod_{a=1}^{k-1} calB_k(x_2, ..., x_{a+1}) from the
    positivity argument for the third kind (with
    calB_k(c_1..c_k) = (A_1(c_1)+A_1(-c_1))/2 P + c_1 A_1(c_1) P u_0,
    P = prod_{a=k}^{2} prod_{b=1}^{k-1} h_b(c_a))."""
    n = group.rank
    kind = nil(group)
    k = len(args)
    out = coxalg.product_of_factors(transfer_factors("B", args[k - 1], group), kind)
    for a in range(1, k):
        out = out * _script_b(list(args[1 : a + 1]), group)
    return out


def _script_b(cs: Sequence[Polynomial], group: GroupType) -> AlgebraElement:
    n = group.rank
    kind = nil(group)
    k = len(cs)
    c1 = Frac(cs[0])
    plus = coxalg.product_of_factors(a_factors(1, c1, n), kind)
    minus = coxalg.product_of_factors(a_factors(1, -c1, n), kind)
    pfs = [h(b, cs[a - 1]) for a in range(k, 1, -1) for b in range(1, k)]
    P = coxalg.product_of_factors(pfs, kind)
    u0 = AlgebraElement.generator(kind, 0)
    return (plus + minus).scale(Frac(1) / 2) * P + (plus * P * u0).scale(c1)


def factorized_target(form: str, group: GroupType) -> AlgebraElement:
    """The expression a factorized form is compared against."""
    n = group.rank
    if form in ("typeB_single", "typeD_odd", "typeD_even"):
        return build(ExpressionSpec(group))
    if form == "typeB_double":
        return build(ExpressionSpec(group, arity="double"))
    if form == "typeA_double":
        return build(ExpressionSpec(group, arity="double"))
    if form == "typeC_third":
        return build(ExpressionSpec(group, kind="third"))
    if form == "typeB_specialization":
        X = xs(n)
        transfers = [f for c in X for f in transfer_factors("B", c, group)]
        r = Recipe(nil(group)).factors(schubert_a_factors(X, n)).inverse()
        return r.factors(transfers).factors(schubert_a_factors(_neg(X), n)).evaluate()
    raise ExpressionError(f"unknown factorized form {form!r}")


# -- specializations of the second-kind double expression ---------------------------------


def permutation_specialization(w: GroupElement) -> AlgebraElement:
    """(S^A(-w(X)))^-1 S^A(-X) for an unsigned permutation w: the type A double
    expression at X -> -X, Y -> w(X)."""
    n = w.group.rank
    if any(v < 0 for v in w.window):
        raise ExpressionError(f"{w} is not an unsigned permutation")
    X = xs(n)
    wx = [Frac(var("x", w(i))) for i in range(1, n + 1)]
    kind = AlgebraKind("nil", w.group)
    r = Recipe(kind).factors(schubert_a_factors(_neg(wx), n)).inverse()
    return r.factors(schubert_a_factors(_neg(X), n)).evaluate()


def complement_specialization(u: GroupElement) -> AlgebraElement:
    """(S^A(u(X)))^-1 B(x_1)...B(x_n) S^A(-X) in the type B algebra of u's rank."""
    n = u.group.rank
    group = GroupType("B", n)
    X = xs(n)
    ux = [Frac(var("x", u(i))) for i in range(1, n + 1)]
    transfers = [f for c in X for f in transfer_factors("B", c, group)]
    r = Recipe(nil(group)).factors(schubert_a_factors(ux, n)).inverse()
    return r.factors(transfers).factors(schubert_a_factors(_neg(X), n)).evaluate()


def signed_embedding(u: GroupElement, group: GroupType, negate: bool = False) -> GroupElement:
    """u in S_n viewed in W(B_n) or W(D_n); with ``negate`` the all-negative u-bar."""
    window = tuple(-v for v in u.window) if negate else u.window
    return GroupElement(group, window)


def cauchy_sum(single: PolynomialFamily, w: GroupElement, y_family: str = "y") -> Polynomial:
    """sum of phi_u(X) phi_v(Y) over w = v^-1 u with l(w) = l(u) + l(v)."""
    from .poly import ZERO, rename_family

    out = ZERO
    for u, fu in single.table.items():
        # v^-1 u = w  <=>  v = u w^-1
        v = u * w.inverse()
        if v in single.table and w.length == u.length + v.length:
            out += fu * rename_family(single.table[v], "x", y_family)
    return out


def d_product_identity(group: GroupType, c1: FracLike, c2: FracLike) -> tuple[AlgebraElement, AlgebraElement]:
    """Both sides of D(x)D(y) = A_1(x)A_1(y) h_hat(x+y) h_1(-x-y) A_1(-x)^-1 A_1(-y)^-1."""
    n = group.rank
    kind = nil(group)
    c1, c2 = Frac.coerce(c1), Frac.coerce(c2)
    lhs = coxalg.product_of_factors(transfer_factors("D", c1, group) + transfer_factors("D", c2, group), kind)
    fs = a_factors(1, c1, n) + a_factors(1, c2, n) + [h(HAT, c1 + c2), h(1, -c1 - c2)]
    fs += coxalg.inverse_factors(a_factors(1, -c1, n), kind) + coxalg.inverse_factors(a_factors(1, -c2, n), kind)
    return lhs, coxalg.product_of_factors(fs, kind)
