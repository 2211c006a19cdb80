"""
Executable catalog of identities for the generating expressions.

Every suite is a deterministic function of its parameters returning a
:class:`PropertyReport`.  Suites marked *reported* compare two conventions
and never count as failures; all others pass or fail, and a failure always
carries a witness ``{"inputs", "lhs", "rhs"}``.

>>> run_suite("yb_typeB_nil", {"n": 2}).status
'pass'
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

import flint

from . import coxalg, expressions as ex, poly, symfunc, weyl
from .coxalg import AlgebraElement, AlgebraKind, SqrtError, h
from .expressions import ExpressionError, ExpressionSpec
from .poly import BETA, Frac, beta_add, beta_sub, render, var
from .weyl import HAT, GroupElement, GroupType

RANK_LIMITS = {"A": (1, 5), "B": (2, 4), "C": (2, 4), "D": (3, 4)}
ALL_WORDS_UP_TO = 6
WORD_SAMPLE = 50
STATUSES = ("pass", "fail", "reported")


class VerifyError(ValueError):
    pass


@dataclass
class PropertyReport:
    suite_id: str
    citation: str
    parameters: dict
    status: str
    witness: dict | None = None
    checked: int = 0
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise VerifyError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise VerifyError(f"{self.suite_id}: a failing report needs a witness")

    def to_dict(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "citation": self.citation,
            "parameters": self.parameters,
            "status": self.status,
            "witness": self.witness,
            "checked": self.checked,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass
class Outcome:
    ok: bool
    checked: int = 0
    witness: dict | None = None
    note: str = ""


@dataclass
class Suite:
    suite_id: str
    citation: str
    run: Callable[[dict], Outcome]
    defaults: dict = field(default_factory=dict)
    reported: bool = False


SUITES: dict[str, Suite] = {}


def suite(suite_id: str, citation: str, reported: bool = False, **defaults):
    def register(fn):
        SUITES[suite_id] = Suite(suite_id, citation, fn, defaults, reported)
        return fn

    return register


def catalog() -> list[str]:
    return sorted(SUITES)


def run_suite(suite_id: str, params: dict | None = None) -> PropertyReport:
    if suite_id not in SUITES:
        raise VerifyError(f"unknown suite {suite_id!r}")
    s = SUITES[suite_id]
    merged = dict(s.defaults)
    merged.update({k: v for k, v in (params or {}).items() if v is not None})
    unknown = set(merged) - set(s.defaults)
    if unknown:
        raise VerifyError(f"{suite_id} does not take {sorted(unknown)}")
    if "type" in merged:
        _group(merged)
    try:
        out = s.run(merged)
    except (SqrtError, ex.DecompositionError) as err:
        out = Outcome(False, 0, witness(merged, f"error: {err}", "an expression"), "construction failed")
    except (ExpressionError, weyl.WeylError) as err:
        raise VerifyError(str(err)) from None
    if s.reported:
        status = "reported"
    else:
        status = "pass" if out.ok else "fail"
    return PropertyReport(suite_id, s.citation, merged, status, out.witness if not out.ok else None, out.checked, out.note)


def run_all(params: dict | None = None, suites: Iterable[str] | None = None) -> list[PropertyReport]:
    """Run suites in id order; parameters a suite does not take are dropped."""
    out = []
    for sid in sorted(suites or catalog()):
        s = SUITES[sid]
        mine = {k: v for k, v in (params or {}).items() if k in s.defaults}
        try:
            out.append(run_suite(sid, mine))
        except (VerifyError, ExpressionError, weyl.WeylError) as err:
            out.append(PropertyReport(sid, s.citation, mine, "reported", None, 0, f"not applicable: {err}"))
    return out


# -- helpers ------------------------------------------------------------------------------


def _group(params: dict) -> GroupType:
    tag = str(params.get("type", "B")).upper()
    n = int(params.get("n", 2))
    if tag not in RANK_LIMITS:
        raise VerifyError(f"unknown type {tag!r}")
    lo, hi = RANK_LIMITS[tag]
    if not lo <= n <= hi:
        raise VerifyError(f"rank {n} out of the supported range {lo}..{hi} for type {tag}")
    return GroupType(tag, n)


def _show(value) -> str:
    if isinstance(value, AlgebraElement):
        return coxalg.format_element(value, limit=12)
    if isinstance(value, (Frac, flint.fmpq_mpoly)):
        return render(value)
    return str(value)


def witness(inputs, lhs, rhs) -> dict:
    return {"inputs": _jsonable(inputs), "lhs": _show(lhs), "rhs": _show(rhs)}


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return _show(value)


def _word(w: GroupElement) -> str:
    return weyl.format_word(weyl.reduced_word(w)) or "id"


def first_difference(a: AlgebraElement, b: AlgebraElement):
    for w in a.kind.W.elements:
        ca, cb = a.coefficient(w), b.coefficient(w)
        if ca != cb:
            return w, ca, cb
    return None


def _compare(a: AlgebraElement, b: AlgebraElement, inputs: dict, checked: int = 1) -> Outcome:
    diff = first_difference(a, b)
    if diff is None:
        return Outcome(True, checked)
    w, ca, cb = diff
    return Outcome(False, checked, witness({**inputs, "coefficient": _word(w)}, ca, cb))


@lru_cache(maxsize=128)
def _family(spec: ExpressionSpec) -> ex.PolynomialFamily:
    polynomial = spec.flavor == "schubert"
    return ex.family(spec, polynomial=polynomial)


@lru_cache(maxsize=128)
def _built(spec: ExpressionSpec) -> AlgebraElement:
    return ex.build(spec)


def _all_specs(group: GroupType, flavor: str) -> list[ExpressionSpec]:
    out = []
    for kind in ex.KINDS:
        for arity in ex.ARITIES:
            try:
                out.append(ExpressionSpec(group, flavor, kind, arity))
            except ExpressionError:
                continue
    return out


def _x1y1():
    return Frac(var("x", 1)), Frac(var("y", 1))


def _ops(mode: str):
    if mode == "nil":
        return (lambda a, b: a + b), (lambda a, b: a - b)
    return beta_add, beta_sub


def _kind(mode: str, group: GroupType) -> AlgebraKind:
    if mode not in ("nil", "id"):
        raise VerifyError(f"mode must be nil or id, got {mode!r}")
    return AlgebraKind(mode, group)


# -- Yang-Baxter ----------------------------------------------------------------------------


def _yb_a(params, mode):
    group = _group(params)
    k = _kind(mode, group)
    add, _ = _ops(mode)
    x, y = _x1y1()
    checked = 0
    for i in range(1, group.rank - 1):
        lhs = coxalg.product_of_factors([h(i, x), h(i + 1, add(x, y)), h(i, y)], k)
        rhs = coxalg.product_of_factors([h(i + 1, y), h(i, add(x, y)), h(i + 1, x)], k)
        out = _compare(lhs, rhs, {"node": i})
        checked += 1
        if not out.ok:
            return Outcome(False, checked, out.witness)
    return Outcome(True, checked, note="" if checked else "no adjacent A-node pair at this rank")


def _yb_b(params, mode):
    group = _group({**params, "type": "B"})
    k = _kind(mode, group)
    add, sub = _ops(mode)
    x, y = _x1y1()
    lhs = coxalg.product_of_factors([h(0, y), h(1, add(x, y)), h(0, x), h(1, sub(x, y))], k)
    rhs = coxalg.product_of_factors([h(1, sub(x, y)), h(0, x), h(1, add(x, y)), h(0, y)], k)
    return _compare(lhs, rhs, {"nodes": "0,1"})


def _yb_d(params, mode):
    group = _group({**params, "type": "D"})
    k = _kind(mode, group)
    add, _ = _ops(mode)
    x, y = _x1y1()
    checked = 0
    for a, b in ((2, HAT), (HAT, 2)):
        lhs = coxalg.product_of_factors([h(a, x), h(b, add(x, y)), h(a, y)], k)
        rhs = coxalg.product_of_factors([h(b, y), h(a, add(x, y)), h(b, x)], k)
        out = _compare(lhs, rhs, {"outer": weyl.format_word((a,))})
        checked += 1
        if not out.ok:
            return Outcome(False, checked, out.witness)
    return Outcome(True, checked)


for _mode in ("nil", "id"):
    suite(f"yb_typeA_{_mode}", f"Yang-Baxter relation on adjacent type A nodes ({_mode})", type="A", n=4)(
        lambda p, m=_mode: _yb_a(p, m)
    )
    suite(f"yb_typeB_{_mode}", f"Yang-Baxter relation on the nodes 0, 1 of type B ({_mode})", n=2)(
        lambda p, m=_mode: _yb_b(p, m)
    )
    suite(f"yb_typeD_{_mode}", f"Yang-Baxter relation on the nodes hat, 2 of type D ({_mode})", n=3)(
        lambda p, m=_mode: _yb_d(p, m)
    )


# -- commutativity and inversion -------------------------------------------------------------

_TRANSFER_MODEL = {"B": "B", "C": "B", "calB": "B", "calC": "B", "D": "D", "calD": "D"}


def _commute_inverse(params, symbol):
    n = int(params["n"])
    model = _TRANSFER_MODEL[symbol]
    group = _group({"type": model, "n": n})
    mode = "id" if symbol.startswith("cal") else "nil"
    kind = coxalg.idc(group, int(params["beta_scale"])) if mode == "id" else coxalg.nil(group)
    x, y = _x1y1()

    def t(c):
        return coxalg.product_of_factors(ex.transfer_factors(symbol, c, group), kind)

    a, b = t(x), t(y)
    out = _compare(a * b, b * a, {"check": "commute", "symbol": symbol})
    if not out.ok:
        return out
    out = _compare(a * t(-x), AlgebraElement.one(kind), {"check": "inverse", "symbol": symbol})
    out.checked = 2
    return out


for _sym in _TRANSFER_MODEL:
    suite(
        f"commute_inverse_{_sym}",
        f"transfer element {_sym}: X(x)X(y) = X(y)X(x) and X(x)X(-x) = 1",
        n=2 if _TRANSFER_MODEL[_sym] == "B" else 3,
        beta_scale=1,
    )(lambda p, s=_sym: _commute_inverse(p, s))


@suite("commute_inverse_tilde", "averaged transfer elements commute", type="B", n=2)
def _commute_tilde(params):
    group = _group(params)
    symbols = ("tB", "tC") if group.model == "B" else ("tD",)
    x, y = _x1y1()
    for s in symbols:
        a, b = ex.transfer(s, x, group), ex.transfer(s, y, group)
        out = _compare(a * b, b * a, {"symbol": s})
        if not out.ok:
            return out
    return Outcome(True, len(symbols))


# -- coherency ---------------------------------------------------------------------------------


def claimed_nodes(group: GroupType, flavor: str, kind: str) -> dict[int, object]:
    """Nodes where an action identity is asserted, mapped to the constant c in
    (u_i - c); c = 0 for divided differences."""
    gens = group.generators
    a_nodes = [i for i in gens if i >= 1]
    if flavor == "schubert":
        if group.tag == "A" or kind == "second":
            return {i: 0 for i in gens}
        return {i: 0 for i in a_nodes}
    if group.tag == "A":
        return {i: BETA for i in gens}
    if group.tag == "B":
        out = {i: BETA / 2 for i in a_nodes}
        if kind == "second":
            out[0] = BETA
        return out
    if group.tag == "D" and kind == "second":
        return {HAT: BETA}
    return {}


def _operator(group: GroupType, flavor: str, i: int, family: str, roots: str):
    """The action at node i as an unreduced fraction map (see poly.cross_equal)."""
    tag = group.tag
    flip = roots == "base" and tag != "A" and i >= 1
    if flavor == "schubert":
        weight = 1
    elif roots != "literal":
        raise VerifyError("isobaric operators use the literal roots only")
    else:
        weight = poly.isobaric_weight(i, tag, family)

    def op(c):
        out = poly.divided_difference_unreduced(c, i, tag, family, weight)
        return -out if flip else out

    return op


def _coherency(params, side):
    group = _group(params)
    flavor, kind = params["flavor"], params["kind"]
    spec = ExpressionSpec(group, flavor, kind, params["arity"])
    nodes = claimed_nodes(group, flavor, kind)
    if params["i"] is not None:
        i = int(params["i"])
        if i not in nodes:
            raise VerifyError(f"no action identity is asserted at node {i} for {spec.label()}")
        nodes = {i: nodes[i]}
    if not nodes:
        raise VerifyError(f"no action identity is asserted for {spec.label()}")
    if params["arity"] == "single" and side == "y":
        raise VerifyError("single expressions have no y variables")
    family = "x" if side == "x" else "y"
    e = _built(spec)
    k = e.kind
    checked = 0
    for i, c in nodes.items():
        op = _operator(group, flavor, i, family, params["roots"])
        if params["level"] == "algebra":
            u = AlgebraElement.generator(k, i) - AlgebraElement.one(k).scale(c)
            rhs = e * u if side == "x" else u * e
            out = _compare_lazy(e, op, rhs, {"node": i, "side": side})
            checked += 1
        else:
            out = _coherency_coefficients(e, i, c, side, op)
            checked += out.checked
        if not out.ok:
            out.checked = checked
            return out
    return Outcome(True, checked)


def _compare_lazy(e: AlgebraElement, op, rhs: AlgebraElement, inputs: dict) -> Outcome:
    """op applied coefficientwise to e versus rhs, shortest elements first,
    stopping at the first mismatch (the coefficients can be large fractions)."""
    for w in e.kind.W.elements:
        lhs = op(e.coefficient(w))
        if not poly.cross_equal(lhs, rhs.coefficient(w)):
            return Outcome(False, 1, witness({**inputs, "coefficient": _word(w)}, lhs.normalize(), rhs.coefficient(w)))
    return Outcome(True, 1)


def _coherency_coefficients(e: AlgebraElement, i: int, c, side: str, op) -> Outcome:
    """Compare op(X_v) with the recursion read off from e*(u_i - c) (or (u_i - c)*e):

    X_{v s} (+ beta X_v in Id) if l(v s) < l(v), else 0; then minus c X_v.
    """
    group = e.kind.group
    beta = e.kind.beta if e.kind.mode == "id" else Frac(0)
    c = Frac.coerce(c)
    checked = 0
    for v in e.kind.W.elements:
        sv = weyl.apply_generator(v, i, "right" if side == "x" else "left")
        expected = Frac(0)
        if sv.length < v.length:
            expected = e.coefficient(sv) + beta * e.coefficient(v)
        expected = expected - c * e.coefficient(v)
        actual = op(e.coefficient(v))
        checked += 1
        if not poly.cross_equal(actual, expected):
            inputs = {"node": i, "side": side, "element": str(v), "group": str(group)}
            return Outcome(False, checked, witness(inputs, actual.normalize(), expected))
    return Outcome(True, checked)


_COHERENCY_DEFAULTS = dict(type="B", n=2, flavor="schubert", kind="second", arity="double", i=None, level="algebra", roots="literal")
suite("coherency_x", "divided difference in x acts by right multiplication with u_i", **_COHERENCY_DEFAULTS)(
    lambda p: _coherency(p, "x")
)
suite("coherency_y", "divided difference in y acts by left multiplication with u_i", **_COHERENCY_DEFAULTS)(
    lambda p: _coherency(p, "y")
)


# -- stability ---------------------------------------------------------------------------------


def stability_check(small: ExpressionSpec) -> Outcome:
    big = small.with_group(small.group.embed())
    fs, fb = _family(small), _family(big)
    n1 = big.group.rank
    zero = {f"x{n1}": 0, f"y{n1}": 0}
    checked = 0
    for w, f in fs.rows():
        g = poly.substitute(fb[w.embed()], zero)
        checked += 1
        if Frac.coerce(g) != Frac.coerce(f):
            return Outcome(False, checked, witness({"spec": big.label(), "element": str(w)}, g, f))
    return Outcome(True, checked)


@suite("stability", "embedding W_n -> W_{n+1} with x_{n+1} = y_{n+1} = 0", type="B", n=2, kind="first", arity="double", flavor="schubert")
def _stability(params):
    group = _group(params)
    _group({"type": group.tag, "n": group.rank + 1})
    return stability_check(ExpressionSpec(group, params["flavor"], params["kind"], params["arity"]))


@suite("stability_grothendieck", "embedding W_n -> W_{n+1} for the K-theoretic families", reported=True, type="B", n=2, kind="first", arity="double")
def _stability_groth(params):
    group = _group(params)
    return stability_check(ExpressionSpec(group, "grothendieck", params["kind"], params["arity"]))


# -- vanishing ------------------------------------------------------------------------------------


def _second_double(group: GroupType, flavor: str) -> ExpressionSpec:
    return ExpressionSpec(group, flavor, "second", "double")


def words_for(w: GroupElement) -> list[tuple[int, ...]]:
    if w.length <= ALL_WORDS_UP_TO:
        return weyl.reduced_words(w)
    return weyl.reduced_words(w, WORD_SAMPLE)


@suite(
    "vanishing_product_eq",
    "specialization Y = -w(X) equals the ordered product along any reduced word",
    type="B",
    n=2,
    flavor="schubert",
    roots="index",
)
def _vanishing_product(params):
    group = _group(params)
    deformed = params["flavor"] == "grothendieck"
    spec = _second_double(group, params["flavor"])
    checked = 0
    for w in weyl.weyl_group(group).elements:
        special = ex.build(spec, Y=ex.minus_w_of_x(w))
        products = []
        for word in words_for(w):
            rhs = ex.vanishing_product(w, word, deformed, params["roots"])
            products.append(rhs)
            checked += 1
            out = _compare(special, rhs, {"element": str(w), "word": weyl.format_word(word)}, checked)
            if not out.ok:
                same = all(p == products[0] for p in products)
                out.note = "products agree across the words tried" if same else ""
                return out
    return Outcome(True, checked)


def specialized_table(spec: ExpressionSpec, v: GroupElement) -> dict[GroupElement, Frac]:
    """Coefficients of the second-kind double expression at y_i = -x_{v(i)}."""
    e = ex.build(spec, Y=ex.minus_w_of_x(v))
    return {w: e.coefficient(w) for w in e.kind.W.elements}


@suite(
    "vanishing_bruhat",
    "X_w(X, -v(X)) is nonzero exactly when v <= w",
    type="B",
    n=2,
    flavor="schubert",
    orientation="literal",
    action="window",
)
def _vanishing_bruhat(params):
    """``action`` "window" reads -v(X) as y_i = -x_{v(i)}, "inverse" as
    y_i = -x_{v^-1(i)}; ``orientation`` "reversed" tests w <= v instead."""
    group = _group(params)
    spec = _second_double(group, params["flavor"])
    elements = weyl.weyl_group(group).elements
    reversed_ = params["orientation"] == "reversed"
    checked = 0
    for v in elements:
        values = specialized_table(spec, v if params["action"] == "window" else v.inverse())
        for w in elements:
            nonzero = not values[w].is_zero()
            below = weyl.bruhat_leq(w, v) if reversed_ else weyl.bruhat_leq(v, w)
            checked += 1
            if nonzero != below:
                rel = "w <= v" if reversed_ else "v <= w"
                return Outcome(
                    False, checked, witness({"v": str(v), "w": str(w)}, f"X_w(X,-v(X)) = {render(values[w])}", f"{rel} is {below}")
                )
    return Outcome(True, checked)


@suite("vanishing_permutations", "X(X, -w(X)) equals the type A double expression at (-X, w(X)) for w in S_n", type="B", n=2)
def _vanishing_perm(params):
    group = _group(params)
    if group.tag == "A":
        raise VerifyError("needs type B, C or D")
    spec = _second_double(group, "schubert")
    checked = 0
    for u in weyl.all_elements(GroupType("A", group.rank)):
        w = ex.signed_embedding(u, group)
        lhs = ex.build(spec, Y=ex.minus_w_of_x(w))
        checked += 1
        out = _compare(lhs, ex.permutation_specialization(w), {"w": str(w)}, checked)
        if not out.ok:
            return out
    return Outcome(True, checked)


@suite("vanishing_complement", "for w = u-bar the specialization is (S^A(u(X)))^-1 B(X) S^A(-X)", n=2)
def _vanishing_complement(params):
    group = _group({"type": "B", "n": params["n"]})
    n = group.rank
    spec = _second_double(group, "schubert")
    checked = 0
    for u in weyl.all_elements(GroupType("A", n)):
        w = ex.signed_embedding(u, group, negate=True)
        if w.length != n * n - u.length:
            return Outcome(False, checked, witness({"u": str(u)}, f"l(u-bar) = {w.length}", n * n - u.length))
        lhs = ex.build(spec, Y=ex.minus_w_of_x(w))
        checked += 1
        out = _compare(lhs, ex.complement_specialization(u), {"u": str(u)}, checked)
        if not out.ok:
            return out
    return Outcome(True, checked)


# -- factorizations -------------------------------------------------------------------------------

_FACTORIZATIONS = {
    "typeB_single": ("B", "typeB_single", None),
    "typeD": ("D", None, "n(n-1)"),
    "typeB_double": ("B", "typeB_double", None),
    "typeB_specialization": ("B", "typeB_specialization", "n^2"),
    "typeA_double": ("A", "typeA_double", None),
    "typeC_third": ("C", "typeC_third", None),
}


def _factorization(params, name):
    tag, form, count_rule = _FACTORIZATIONS[name]
    group = _group({"type": tag, "n": params["n"]})
    n = group.rank
    if form is None:
        form = "typeD_odd" if n % 2 else "typeD_even"
    e, count = ex.factorized(form, group, params["variant"])
    target = ex.factorized_target(form, group)
    expected_count = {"n^2": n * n, "n(n-1)": n * (n - 1), None: None}[count_rule]
    if expected_count is not None and count != expected_count:
        return Outcome(False, 1, witness({"form": form, "n": n}, f"{count} factors", f"{expected_count} factors"))
    out = _compare(e, target, {"form": form, "variant": params["variant"]})
    out.note = f"{count} h-factors" if count else ""
    return out


for _name, (_tag, _form, _rule) in _FACTORIZATIONS.items():
    suite(
        f"factorization_{_name}",
        f"factored product form ({_name}) equals the built expression",
        n={"A": 3, "B": 2, "C": 2, "D": 3}[_tag],
        variant="literal",
    )(lambda p, name=_name: _factorization(p, name))


# -- Cauchy identities and the radical form -------------------------------------------------------


def _cauchy(group: GroupType, kind: str) -> Outcome:
    single = _family(ExpressionSpec(group, "schubert", kind, "single"))
    double = _family(ExpressionSpec(group, "schubert", kind, "double"))
    checked = 0
    for w, f in double.rows():
        s = ex.cauchy_sum(single, w)
        checked += 1
        if s != f:
            return Outcome(False, checked, witness({"element": str(w)}, s, f))
    return Outcome(True, checked)


@suite("cauchy_typeA", "double = sum over w = v^-1 u of S_u(X) S_v(Y) with lengths adding", n=3)
def _cauchy_a(params):
    return _cauchy(_group({"type": "A", "n": params["n"]}), "first")


@suite("cauchy_W", "double family assembled from singles by the Cauchy rule", reported=True, type="B", n=2, kind="second")
def _cauchy_w(params):
    out = _cauchy(_group(params), params["kind"])
    out.note = "identity holds" if out.ok else "identity fails"
    return out


@suite("radical_vs_quotient", "single-radical double form versus the quotient of singles", reported=True, type="B", n=2, flavor="schubert")
def _radical(params):
    group = _group(params)
    spec = _second_double(group, params["flavor"])
    out = _compare(ex.radical_double_recipe(spec).evaluate(), _built(spec), {"spec": spec.label()})
    out.note = "forms agree" if out.ok else "forms differ"
    return out


# -- Grothendieck degeneration and normalization ----------------------------------------------------


def _at_beta_zero(c: Frac) -> Frac:
    return Frac.coerce(poly.substitute(c, {"b": 0}))


@suite("grothendieck_beta0", "K-theoretic families at beta = 0 equal the cohomological ones", type="B", n=2, kind=None, arity=None)
def _beta0(params):
    group = _group(params)
    checked = 0
    failures = []
    first = None
    for spec in _all_specs(group, "grothendieck"):
        if params["kind"] and spec.kind != params["kind"]:
            continue
        if params["arity"] and spec.arity != params["arity"]:
            continue
        try:
            g = _built(spec)
        except SqrtError as err:
            failures.append(spec.label())
            first = first or witness({"spec": spec.label()}, f"error: {err}", "a polynomial family")
            continue
        s = _built(spec.with_flavor("schubert"))
        for w in g.kind.W.elements:
            checked += 1
            a, b = _at_beta_zero(g.coefficient(w)), Frac.coerce(s.coefficient(w))
            if a != b:
                failures.append(spec.label())
                first = first or witness({"spec": spec.label(), "element": str(w)}, a, b)
                break
    if not checked and not failures:
        raise VerifyError("no Grothendieck family matches the filter")
    return Outcome(not failures, checked, first, "; ".join(f"failed: {f}" for f in failures))


@suite("normalization", "every family has identity coefficient 1", type="B", n=2)
def _normalization(params):
    group = _group(params)
    checked = 0
    failures, first = [], None
    for flavor in ex.FLAVORS:
        for spec in _all_specs(group, flavor):
            try:
                e = _built(spec)
            except SqrtError as err:
                failures.append(spec.label())
                first = first or witness({"spec": spec.label()}, f"error: {err}", 1)
                continue
            checked += 1
            c = e.coefficient(weyl.identity(group))
            if not c.is_one():
                failures.append(spec.label())
                first = first or witness({"spec": spec.label()}, c, 1)
    return Outcome(not failures, checked, first, "; ".join(f"failed: {f}" for f in failures))


# -- symmetric functions -------------------------------------------------------------------------------


@suite("supersymmetry", "F_w(t, -t, z_3, ...) does not depend on t", type="B", n=2, m=4, mode="nil")
def _supersymmetry(params):
    group = _group(params)
    m = int(params["m"])
    fam = ex.stanley(group, params["mode"], m)
    zs = ex.zs(m)
    checked = 0
    for w, f in fam.rows():
        checked += 1
        if not symfunc.is_supersymmetric(f, zs):
            return Outcome(False, checked, witness({"element": str(w)}, f, "supersymmetric"))
    return Outcome(True, checked)


@suite("halving", "p_k(t)/2 = p_k(z) turns F_w(Z) into the coefficients of the radical in t", type="B", n=2, m=2)
def _halving(params):
    group = _group(params)
    m = int(params["m"])
    kind = coxalg.nil(group)
    ts = [var("t", i) for i in range(1, m + 1)]
    if group.tag == "A":
        raise VerifyError("needs type B, C or D")
    radical = coxalg.sqrt(coxalg.product_of_factors([f for t in ts for f in ex.transfer_factors(group.tag, t, group)], kind))
    # at least as many z's as the top degree, so the odd power-sum expansion is unique
    zcount = max(m, weyl.longest_element(group).length)
    fam = ex.stanley(group, "nil", zcount)
    checked = 0
    for w, f in fam.rows():
        lhs = symfunc.halve_and_substitute(f, ex.zs(zcount), ts)
        rhs = radical.coefficient(w, polynomial=True)
        checked += 1
        if lhs != rhs:
            return Outcome(False, checked, witness({"element": str(w)}, lhs, rhs))
    return Outcome(True, checked)


def strict_partitions(k: int) -> list[tuple[int, ...]]:
    return [p for p in symfunc.partitions(k) if all(a > b for a, b in zip(p, p[1:]))]


@suite("schurP_expansion", "F_w expands in Schur P-polynomials with nonnegative integer coefficients", type="B", n=2, m=4)
def _schur_p(params):
    group = _group(params)
    m = int(params["m"])
    zs = ex.zs(m)
    fam = ex.stanley(group, "nil", m)
    checked = 0
    for w, f in fam.rows():
        shapes = strict_partitions(w.length)
        coeffs = symfunc.p_expansion(f, zs, shapes)
        checked += 1
        bad = {lam: c for lam, c in coeffs.items() if c < 0 or c.q != 1}
        if bad:
            return Outcome(False, checked, witness({"element": str(w)}, str(coeffs), "nonnegative integers"))
    return Outcome(True, checked)


@suite("positivity_third_kind", "third-kind coefficients lie in Z>=0[X]", n=2)
def _positivity(params):
    group = _group({"type": "C", "n": params["n"]})
    fam = _family(ExpressionSpec(group, kind="third"))
    checked = 0
    for w, f in fam.rows():
        checked += 1
        if any(c < 0 or c.q != 1 for c in f.coeffs()):
            return Outcome(False, checked, witness({"element": str(w)}, f, "nonnegative integer coefficients"))
    return Outcome(True, checked)


# -- golden tables ---------------------------------------------------------------------------------------


def golden_stanley(variant: str = "literal") -> dict[tuple[int, ...], flint.fmpq_mpoly]:
    """F_w(z_1..z_4) for W(B_2), keyed by reduced word.  ``amended`` replaces
    the factor z3 z4 in the u_101 entry by z3 + z4, which restores homogeneity
    and symmetry."""
    z1, z2, z3, z4 = ex.zs(4)
    s = z1 + z2 + z3 + z4
    f010 = z1 * z2 * (z1 + z2) + (z1 + z2) * (z3 + z4) * s + z3 * z4 * (z3 + z4)
    second = (z3 + z4) if variant == "amended" else z3 * z4
    f101 = (z1 + z2) * (z1**2 + z1 * z2 + z2**2) + second * (z3**2 + z3 * z4 + z4**2) + 2 * (z1 + z2) * (z3 + z4) * s
    one = poly.ONE
    return {
        (): one,
        (0,): s,
        (1,): 2 * s,
        (0, 1): s**2,
        (1, 0): s**2,
        (0, 1, 0): f010,
        (1, 0, 1): f101,
        (0, 1, 0, 1): s * f010,
    }


def golden_double() -> dict[tuple[int, ...], flint.fmpq_mpoly]:
    """First-kind double Schubert polynomials of W(B_2), keyed by reduced word."""
    x1, x2 = ex.xs(2)
    y1, y2 = ex.ys(2)
    s010 = x1 * x2 * (x1 + x2) + (x1 + x2) * (y1 + y2) * (x1 + x2 + y1 + y2) + y1 * y2 * (y1 + y2)
    return {
        (): poly.ONE,
        (0,): x1 + x2 + y1 + y2,
        (1,): x1 + 2 * x2 + y1 + 2 * y2,
        (0, 1): x1 * x2 + x2**2 + (y1 + y2) * (x1 + 2 * x2 + y1 + y2),
        (1, 0): (x1 + x2) * (x1 + x2 + y1 + 2 * y2) + y1 * y2 + y2**2,
        (0, 1, 0): s010,
        (1, 0, 1): (x1 + x2) * x2**2 + x2 * (x1 + x2) * (y1 + 2 * y2) + (x1 + 2 * x2) * y2 * (y1 + y2) + (y1 + y2) * y2**2,
        (0, 1, 0, 1): (x2 + y2) * s010,
    }


def _golden(table: ex.PolynomialFamily, gold: dict, group: GroupType, extra: list) -> Outcome:
    checked = 0
    for word, g in gold.items():
        w = weyl.from_word(group, word)
        checked += 1
        if table[w] != g:
            return Outcome(False, checked, witness({"element": weyl.format_word(word) or "id"}, table[w], g))
    for label, lhs, rhs in extra:
        checked += 1
        if lhs != rhs:
            return Outcome(False, checked, witness({"check": label}, lhs, rhs))
    return Outcome(True, checked)


@suite("golden_stanley", "displayed table of F_w(z_1..z_4) for W(B_2)", variant="literal")
def _golden_stanley(params):
    group = GroupType("B", 2)
    fam = ex.stanley(group, "nil", 4)
    el = lambda word: fam[weyl.from_word(group, word)]  # noqa: E731
    zs = ex.zs(4)
    extra = [
        ("F_u10 = F_u01", el((1, 0)), el((0, 1))),
        ("F_u0101 = p_1 F_u010", el((0, 1, 0, 1)), symfunc.power_sum(1, zs) * el((0, 1, 0))),
        ("F_u010 = s_21", el((0, 1, 0)), symfunc.schur((2, 1), zs)),
    ]
    return _golden(fam, golden_stanley(params["variant"]), group, extra)


@suite("golden_double", "displayed table of first-kind double Schubert polynomials for W(B_2)")
def _golden_double(params):
    group = GroupType("B", 2)
    fam = _family(ExpressionSpec(group, arity="double"))
    el = lambda word: fam[weyl.from_word(group, word)]  # noqa: E731
    x1, x2 = ex.xs(2)
    y1, y2 = ex.ys(2)
    extra = [
        ("S_u0101 = (x2 + y2) S_u010", el((0, 1, 0, 1)), (x2 + y2) * el((0, 1, 0))),
        ("S_u010 = s_21(x1, x2, y1, y2)", el((0, 1, 0)), symfunc.schur((2, 1), [x1, x2, y1, y2])),
    ]
    return _golden(fam, golden_double(), group, extra)


# -- oracle equivalences ------------------------------------------------------------------------------------


@suite("length_oracle", "closed-form length equals breadth-first distance", type="B", n=3)
def _length_oracle(params):
    group = _group(params)
    bfs = weyl.bfs_lengths(group)
    checked = 0
    for window, d in sorted(bfs.items()):
        w = GroupElement(group, window)
        checked += 1
        if weyl.length(w) != d:
            return Outcome(False, checked, witness({"element": str(w)}, weyl.length(w), d))
    if checked != group.order:
        return Outcome(False, checked, witness({}, checked, group.order))
    return Outcome(True, checked)


@suite("product_oracle", "table-driven product equals the generator-by-generator fold", type="B", n=3, mode="nil")
def _product_oracle(params):
    group = _group(params)
    k = _kind(params["mode"], group)
    x, y = _x1y1()
    elements = [
        ex.transfer(group.tag if group.tag != "A" else "A1", x, group, params["mode"]),
        ex.transfer(group.tag if group.tag != "A" else "A1", y, group, params["mode"]),
    ]
    elements.append(sum((AlgebraElement.basis(k, w, Frac(var("z", 1 + i % 3))) for i, w in enumerate(k.W.elements)), AlgebraElement.zero(k)))
    checked = 0
    for a in elements:
        for b in elements:
            checked += 1
            out = _compare(coxalg.mul(a, b), coxalg.mul_fold(a, b), {"pair": checked})
            if not out.ok:
                return out
    for v in k.W.elements:
        for w in k.W.elements:
            a, b = AlgebraElement.basis(k, v), AlgebraElement.basis(k, w)
            checked += 1
            if coxalg.mul(a, b) != coxalg.mul_fold(a, b):
                return Outcome(False, checked, witness({"v": str(v), "w": str(w)}, coxalg.mul(a, b), coxalg.mul_fold(a, b)))
    return Outcome(True, checked)


@suite("d_product_identity", "D(x)D(y) = A_1(x)A_1(y) h_hat(x+y) h_1(-x-y) A_1(-x)^-1 A_1(-y)^-1", n=3)
def _d_product(params):
    group = _group({"type": "D", "n": params["n"]})
    x, y = _x1y1()
    lhs, rhs = ex.d_product_identity(group, x, y)
    return _compare(lhs, rhs, {"n": group.rank})


def summary_table(reports: Iterable[PropertyReport]) -> str:
    rows = [("suite", "status", "checked", "parameters")]
    for r in reports:
        params = ",".join(f"{k}={v}" for k, v in sorted(r.parameters.items()) if v is not None)
        rows.append((r.suite_id, r.status, str(r.checked), params))
    widths = [max(len(row[c]) for row in rows) for c in range(3)]
    lines = []
    for row in rows:
        lines.append("  ".join(row[c].ljust(widths[c]) for c in range(3)) + "  " + row[3])
    return "\n".join(lines)
