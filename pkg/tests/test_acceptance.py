"""Acceptance criteria, each checked at exact equality with its time budget.

Every criterion runs the literal form of its identities. A failing criterion
prints the first witness; the conventions under which the identities do hold
are exercised in test_verify.py.
"""

import time

from hypothesis import given, settings, strategies as st

from acceptance_log import RESULTS
from classical_schubert import coxalg, verify, weyl
from classical_schubert.verify import VerifyError


class Criterion:
    def __init__(self, number: int, title: str, budget: float | None = None):
        self.number, self.title, self.budget = number, title, budget
        self.failures: list[str] = []
        self.start = time.perf_counter()

    def run(self, suite_id: str, **params):
        report = verify.run_suite(suite_id, params)
        if report.status != "pass":
            self.failures.append(f"{suite_id} {params}: {report.status} {report.witness}")
        return report

    def check(self, label: str, ok: bool):
        if not ok:
            self.failures.append(label)

    def finish(self):
        elapsed = time.perf_counter() - self.start
        if self.budget is not None and elapsed > self.budget:
            self.failures.append(f"runtime {elapsed:.1f}s over the {self.budget:.0f}s budget")
        status = "PASS" if not self.failures else "FAIL"
        line = f"criterion {self.number:2d} {status}  {self.title} ({elapsed:.1f}s)"
        if self.failures:
            line += f"\n    first failure: {self.failures[0]}"
        RESULTS[self.number] = line
        print(line)
        assert not self.failures, "\n".join(self.failures)


def test_criterion_01_stanley_golden_table():
    c = Criterion(1, "B2 Stanley functions match the displayed table", budget=5)
    c.run("golden_stanley", variant="literal")
    c.finish()


def test_criterion_02_double_golden_table():
    c = Criterion(2, "B2 first-kind double Schubert table matches the displayed one", budget=5)
    c.run("golden_double")
    c.finish()


def test_criterion_03_yang_baxter():
    c = Criterion(3, "Yang-Baxter relations, B2-B4 and D3-D4, Nil and Id", budget=30)
    for mode in ("nil", "id"):
        for n in (3, 4):
            c.run(f"yb_typeA_{mode}", type="A", n=n)
        for n in (2, 3, 4):
            c.run(f"yb_typeB_{mode}", n=n)
        for n in (3, 4):
            c.run(f"yb_typeD_{mode}", n=n)
    c.finish()


def test_criterion_04_commute_and_invert():
    c = Criterion(4, "transfer elements commute and invert, ranks 2-4 (D 3-4)", budget=120)
    for symbol in ("B", "C", "calB", "calC"):
        for n in (2, 3, 4):
            c.run(f"commute_inverse_{symbol}", n=n)
    for symbol in ("D", "calD"):
        for n in (3, 4):
            c.run(f"commute_inverse_{symbol}", n=n)
    for tag, ranks in (("B", (2, 3, 4)), ("D", (3, 4))):
        for n in ranks:
            c.run("commute_inverse_tilde", type=tag, n=n)
    c.finish()


def test_criterion_05_coherency():
    c = Criterion(5, "divided difference and isobaric actions as algebra identities", budget=300)
    for tag, n in (("B", 2), ("B", 3), ("D", 3)):
        for flavor in ("schubert", "grothendieck"):
            for kind in ("first", "second"):
                for side in ("coherency_x", "coherency_y"):
                    for level in ("algebra", "coefficients"):
                        try:
                            report = c.run(side, type=tag, n=n, flavor=flavor, kind=kind, level=level)
                        except VerifyError:
                            continue  # no action identity is asserted for this family
                        if report.status == "fail" and level == "algebra":
                            break  # the coefficient recursion fails at the same place
    c.finish()


def test_criterion_06_vanishing():
    c = Criterion(6, "vanishing: product along reduced words and the Bruhat criterion", budget=600)
    c.run("vanishing_product_eq", type="B", n=2)
    for n in (2, 3):
        report = c.run("vanishing_bruhat", type="B", n=n)
        if report.status == "pass":
            c.check(f"B{n} pair count", report.checked == len(weyl.weyl_group(weyl.GroupType("B", n)).elements) ** 2)
    c.finish()


def test_criterion_07_stability():
    c = Criterion(7, "stability under W_n -> W_n+1", budget=None)
    for tag, n, kinds in (("B", 2, ("first", "second")), ("D", 3, ("first", "second")), ("A", 3, ("first",))):
        for kind in kinds:
            for arity in ("single", "double"):
                c.run("stability", type=tag, n=n, kind=kind, arity=arity)
    c.finish()


def test_criterion_08_grothendieck_at_beta_zero():
    c = Criterion(8, "Grothendieck families at beta = 0 equal the Schubert ones")
    for tag, ranks in (("A", (2, 3)), ("B", (2, 3)), ("C", (2, 3)), ("D", (3,))):
        for n in ranks:
            c.run("grothendieck_beta0", type=tag, n=n)
    c.finish()


def test_criterion_09_third_kind_positivity():
    c = Criterion(9, "third-kind coefficients for C2, C3 are nonnegative integers")
    for n in (2, 3):
        c.run("positivity_third_kind", n=n)
    c.finish()


def test_criterion_10_supersymmetry_and_halving():
    c = Criterion(10, "supersymmetry (m = 4) and halving (m = 2) for W(B2)")
    c.run("supersymmetry", type="B", n=2, m=4)
    c.run("halving", type="B", n=2, m=2)
    c.finish()


def test_criterion_11_type_a_cauchy():
    c = Criterion(11, "type A Cauchy identity for S_3 and S_4")
    for n in (3, 4):
        c.run("cauchy_typeA", n=n)
    c.finish()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([("B", 3), ("D", 4), ("C", 3)]), st.data())
def fast_product_agrees(group, data):
    kind = coxalg.nil(weyl.GroupType(*group))
    elements = kind.W.elements
    a = coxalg.AlgebraElement.basis(kind, data.draw(st.sampled_from(elements)))
    b = coxalg.AlgebraElement.basis(kind, data.draw(st.sampled_from(elements)))
    assert coxalg.mul(a, b) == coxalg.mul_fold(a, b)


def test_criterion_12_oracle_equivalences():
    c = Criterion(12, "length, product and factorized-form oracles with factor counts")
    for tag, n in (("A", 4), ("B", 3), ("C", 3), ("D", 4)):
        c.run("length_oracle", type=tag, n=n)
        c.run("product_oracle", type=tag, n=n, mode="nil")
        c.run("product_oracle", type=tag, n=n, mode="id")
    try:
        fast_product_agrees()
    except AssertionError as err:
        c.check(f"fast product: {err}", False)
    forms = {
        "typeB_single": (2, 3),
        "typeD": (3, 4),
        "typeB_double": (2, 3),
        "typeB_specialization": (2, 3),
        "typeA_double": (3, 4),
        "typeC_third": (2, 3),
    }
    for name, ranks in forms.items():
        for n in ranks:
            c.run(f"factorization_{name}", n=n, variant="literal")
    c.finish()

