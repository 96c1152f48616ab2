"""Seeded randomized property suites over the algebraic core.

Each suite draws its instances from a private Random seeded off one run seed,
so a run is reproducible end to end.  Suites return trial/failure counts; the
CLI and the test suite both consume them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .fitmod import (
    PresentedAlgebra,
    PresentedModule,
    base_change,
    direct_sum_free,
    fitting_ideal,
)
from .groebner import (
    Ideal,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    localized_equal,
    reduce,
    s_polynomial,
    saturate,
)
from .kaehler import kaehler_fitting
from .polyring import (
    GREVLEX,
    LEX,
    CoefficientField,
    MonomialOrder,
    Monomial,
    PolyRing,
    Polynomial,
    mono_divides,
    mono_from_pairs,
    mono_mul,
    monomial_compare,
    parse_polynomial,
    print_polynomial,
)

DEFAULT_SEED = 20240915


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: int = 0
    notes: list[str] = field(default_factory=list)

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if len(self.notes) < 3:
                self.notes.append(describe())


_FIELDS = (CoefficientField(0), CoefficientField(2), CoefficientField(3), CoefficientField(5))
_PRIME_FIELDS = (CoefficientField(2), CoefficientField(3), CoefficientField(5))


def _rand_monomial(rng: random.Random, nvars: int, max_deg: int, min_deg: int = 0) -> Monomial:
    while True:
        pairs = []
        budget = rng.randint(min_deg, max_deg)
        for idx in range(nvars):
            if budget <= 0:
                break
            e = rng.randint(0, budget)
            if e:
                pairs.append((idx, e))
                budget -= e
        if sum(e for _, e in pairs) >= min_deg:
            return mono_from_pairs(pairs)


def _rand_poly(
    rng: random.Random,
    ring: PolyRing,
    max_terms: int = 4,
    max_deg: int = 3,
    min_deg: int = 0,
) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        c = rng.randint(-4, 4)
        terms.append((_rand_monomial(rng, ring.nvars, max_deg, min_deg), c))
    return ring.from_terms(terms)


def _rand_ring(rng: random.Random, fields=_FIELDS, max_vars: int = 3) -> PolyRing:
    fld = rng.choice(fields)
    nvars = rng.randint(1, max_vars)
    return PolyRing(fld, [f"x{i}" for i in range(1, nvars + 1)])


def suite_ring_axioms(seed: int, trials: int = 120) -> SuiteResult:
    """Associativity, commutativity, and distributivity on random triples."""
    rng = random.Random(seed)
    result = SuiteResult("ring-axioms")
    for _ in range(trials):
        ring = _rand_ring(rng)
        f, g, h = (_rand_poly(rng, ring) for _ in range(3))
        ok = (
            (f + g) + h == f + (g + h)
            and f * g == g * f
            and (f * g) * h == f * (g * h)
            and f * (g + h) == f * g + f * h
            and f + ring.zero() == f
        )
        result.check(ok, lambda: f"ring axioms broke for f={f}, g={g}, h={h} over {ring}")
    return result


def suite_leibniz(seed: int, trials_per_char: int = 100) -> SuiteResult:
    """derivative(f*g) = derivative(f)*g + f*derivative(g), char 0 and char p."""
    rng = random.Random(seed)
    result = SuiteResult("leibniz")
    for fld in (CoefficientField(0), None):
        for _ in range(trials_per_char):
            actual = fld or rng.choice(_PRIME_FIELDS)
            nvars = rng.randint(1, 3)
            ring = PolyRing(actual, [f"x{i}" for i in range(1, nvars + 1)])
            f, g = _rand_poly(rng, ring), _rand_poly(rng, ring)
            v = rng.randrange(nvars)
            ok = (f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v)
            result.check(ok, lambda: f"Leibniz broke for f={f}, g={g}, v={v} over {ring}")
    return result


def suite_frobenius_kill(seed: int, trials: int = 200) -> SuiteResult:
    """derivative(f^p, v) = 0 for every variable v, over F_p."""
    rng = random.Random(seed)
    result = SuiteResult("frobenius-kill")
    for _ in range(trials):
        fld = rng.choice(_PRIME_FIELDS)
        nvars = rng.randint(1, 3)
        ring = PolyRing(fld, [f"x{i}" for i in range(1, nvars + 1)])
        f = _rand_poly(rng, ring, max_terms=3, max_deg=2)
        fp = f ** fld.characteristic
        ok = all(fp.derivative(v).is_zero for v in range(nvars))
        result.check(ok, lambda: f"d(f^p) != 0 for f={f} over {ring}")
    return result


def suite_monomial_orders(seed: int, trials: int = 200) -> SuiteResult:
    """Multiplicativity and 1-minimality for lex, grevlex, and a block order."""
    rng = random.Random(seed)
    result = SuiteResult("monomial-orders")
    nvars = 4
    orders = (LEX, GREVLEX, MonomialOrder.elimination({0, 2}))
    for _ in range(trials):
        order = rng.choice(orders)
        a = _rand_monomial(rng, nvars, 5)
        b = _rand_monomial(rng, nvars, 5)
        c = _rand_monomial(rng, nvars, 5)
        cmp_ab = monomial_compare(order, a, b, nvars)
        ok = monomial_compare(order, (), a, nvars) <= 0
        ok = ok and ((a == b) == (cmp_ab == 0))
        if cmp_ab < 0:
            ok = ok and monomial_compare(order, mono_mul(a, c), mono_mul(b, c), nvars) < 0
        result.check(ok, lambda: f"order law broke for {a}, {b}, {c} under {order.kind}")
    return result


def suite_parser_roundtrip(seed: int, trials: int = 200) -> SuiteResult:
    """parse(print(f)) = f, printing under grevlex and lex."""
    rng = random.Random(seed)
    result = SuiteResult("parser-roundtrip")
    for _ in range(trials):
        ring = _rand_ring(rng, max_vars=4)
        f = _rand_poly(rng, ring, max_terms=5, max_deg=4)
        ok = parse_polynomial(print_polynomial(f), ring) == f
        ok = ok and parse_polynomial(print_polynomial(f, LEX), ring) == f
        result.check(ok, lambda: f"round trip broke for {f} over {ring}")
    return result


def _rand_ideal(rng: random.Random, ring: PolyRing, max_gens: int = 3, min_deg: int = 0) -> Ideal:
    return Ideal(
        ring,
        [
            _rand_poly(rng, ring, max_terms=3, max_deg=3, min_deg=min_deg)
            for _ in range(rng.randint(1, max_gens))
        ],
    )


def suite_groebner_reduced(seed: int, trials: int = 40) -> SuiteResult:
    """The cached basis is reduced: monic leading terms, and no term of any
    element divisible by the leading term of another."""
    rng = random.Random(seed)
    result = SuiteResult("groebner-reduced-basis")
    for _ in range(trials):
        ring = _rand_ring(rng)
        order = rng.choice((GREVLEX, LEX))
        I = _rand_ideal(rng, ring, min_deg=1)
        gb = I.groebner_basis(order)
        ok = True
        for i, g in enumerate(gb):
            ok = ok and g.leading_term(order)[1] == 1
            for j, h in enumerate(gb):
                if j == i:
                    continue
                lm_j = h.leading_term(order)[0]
                ok = ok and not any(mono_divides(lm_j, m) for m in g.terms)
        result.check(ok, lambda: f"basis not reduced for {I} under {order.kind}")
    return result


def suite_groebner_spolys(seed: int, min_checks: int = 250, max_ideals: int = 400) -> SuiteResult:
    """Every S-polynomial of a reduced basis reduces to zero against it; keeps
    generating ideals until min_checks S-pairs have been verified."""
    rng = random.Random(seed)
    result = SuiteResult("groebner-spolys")
    ideals = 0
    while result.trials < min_checks and ideals < max_ideals:
        ideals += 1
        fld = rng.choice(_FIELDS)
        ring = PolyRing(fld, [f"x{i}" for i in range(1, rng.randint(2, 4) + 1)])
        order = rng.choice((GREVLEX, LEX))
        gens = [
            _rand_poly(rng, ring, max_terms=3, max_deg=3, min_deg=1)
            for _ in range(rng.randint(2, 4))
        ]
        I = Ideal(ring, gens)
        gb = I.groebner_basis(order)
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                r = reduce(s_polynomial(gb[i], gb[j], order), gb, order)
                result.check(r.is_zero, lambda: f"S-poly ({i},{j}) of {I} did not reduce to 0")
    return result


def suite_member_order_invariance(seed: int, trials: int = 60) -> SuiteResult:
    """Ideal membership does not depend on the monomial order."""
    rng = random.Random(seed)
    result = SuiteResult("member-order-invariance")
    for _ in range(trials):
        ring = _rand_ring(rng)
        I = _rand_ideal(rng, ring)
        if rng.random() < 0.5 and I.generators:
            f = _rand_poly(rng, ring) * rng.choice(I.generators)
        else:
            f = _rand_poly(rng, ring)
        ok = ideal_member(f, I, GREVLEX) == ideal_member(f, I, LEX)
        result.check(ok, lambda: f"membership of {f} in {I} differs by order")
    return result


def suite_saturation_laws(seed: int, trials: int = 40) -> SuiteResult:
    """Idempotence of saturation, and I contained in (I : g^inf)."""
    rng = random.Random(seed)
    result = SuiteResult("saturation-laws")
    for _ in range(trials):
        ring = _rand_ring(rng)
        I = _rand_ideal(rng, ring, max_gens=2)
        g = _rand_poly(rng, ring, max_terms=2, max_deg=2)
        if g.is_zero:
            g = ring.variable(0)
        S1 = saturate(I, g)
        ok = ideal_contains(S1, I) and ideal_equal(saturate(S1, g), S1)
        result.check(ok, lambda: f"saturation law broke for {I} at {g}")
    return result


def suite_localized_equivalence(seed: int, trials: int = 20) -> SuiteResult:
    """localized_equal is reflexive, symmetric, and transitive for a fixed g."""
    rng = random.Random(seed)
    result = SuiteResult("localized-equivalence")
    for _ in range(trials):
        ring = _rand_ring(rng, max_vars=2)
        g = ring.variable(0)
        base = _rand_ideal(rng, ring, max_gens=2)
        if not base.generators:
            base = Ideal(ring, [ring.variable(0)])
        # J multiplies a generator by g, K adds a redundant element: both chosen
        # to make coincidences likely enough that transitivity gets exercised
        J = Ideal(ring, [h * g for h in base.generators])
        K = Ideal(ring, list(base.generators) + [base.generators[0] * _rand_poly(rng, ring)])
        trio = (base, J, K)
        ok = all(localized_equal(I, I, g) for I in trio)
        for a in trio:
            for b in trio:
                ok = ok and localized_equal(a, b, g) == localized_equal(b, a, g)
        for a in trio:
            for b in trio:
                for c in trio:
                    if localized_equal(a, b, g) and localized_equal(b, c, g):
                        ok = ok and localized_equal(a, c, g)
        result.check(ok, lambda: f"equivalence broke for {base} at {g}")
    return result


def _rand_module(rng: random.Random, max_rows: int = 3, max_cols: int = 3) -> PresentedModule:
    ring = _rand_ring(rng, max_vars=2)
    relations = Ideal(ring, [_rand_poly(rng, ring, max_terms=2, max_deg=2)]) if rng.random() < 0.4 else Ideal(ring)
    algebra = PresentedAlgebra(ring, relations)
    m = rng.randint(1, max_rows)
    c = rng.randint(1, max_cols)
    matrix = tuple(
        tuple(_rand_poly(rng, ring, max_terms=2, max_deg=2) for _ in range(c)) for _ in range(m)
    )
    return PresentedModule(algebra, matrix, tuple(f"g{i + 1}" for i in range(m)))


def suite_fitting_chain(seed: int, trials: int = 40) -> SuiteResult:
    """Fitt_i contained in Fitt_{i+1} (Laplace expansion)."""
    rng = random.Random(seed)
    result = SuiteResult("fitting-chain")
    for _ in range(trials):
        M = _rand_module(rng)
        ok = all(
            ideal_contains(fitting_ideal(M, i + 1), fitting_ideal(M, i))
            for i in range(0, M.generator_count)
        )
        result.check(ok, lambda: f"chain broke for module over {M.algebra.ring}")
    return result


def suite_fitting_shift(seed: int, trials: int = 40) -> SuiteResult:
    """Fitt_{i+1}(M + free rank 1) = Fitt_i(M)."""
    rng = random.Random(seed)
    result = SuiteResult("fitting-shift")
    for _ in range(trials):
        M = _rand_module(rng)
        Ms = direct_sum_free(M, 1)
        ok = all(
            ideal_equal(fitting_ideal(Ms, i + 1), fitting_ideal(M, i))
            for i in range(0, M.generator_count + 1)
        )
        result.check(ok, lambda: f"shift broke for module over {M.algebra.ring}")
    return result


def suite_fitting_presentation_independence(seed: int, trials: int = 40) -> SuiteResult:
    """Appending a column that is a combination of existing columns changes nothing."""
    rng = random.Random(seed)
    result = SuiteResult("fitting-presentation-independence")
    for _ in range(trials):
        M = _rand_module(rng)
        ring = M.algebra.ring
        coeffs = [_rand_poly(rng, ring, max_terms=2, max_deg=1) for _ in range(M.relation_count)]
        new_col = []
        for row in M.matrix:
            entry = ring.zero()
            for a, e in zip(coeffs, row):
                entry = entry + a * e
            new_col.append(entry)
        M2 = PresentedModule(
            M.algebra,
            tuple(row + (new_col[i],) for i, row in enumerate(M.matrix)),
            M.row_labels,
        )
        ok = all(
            ideal_equal(fitting_ideal(M2, i), fitting_ideal(M, i))
            for i in range(0, M.generator_count + 1)
        )
        result.check(ok, lambda: f"presentation independence broke over {ring}")
    return result


def suite_fitting_base_change(seed: int, trials: int = 100) -> SuiteResult:
    """Fitting ideals commute with the substitutions x_j -> 0 and x_j -> x_j + c."""
    rng = random.Random(seed)
    result = SuiteResult("fitting-base-change")
    for _ in range(trials):
        M = _rand_module(rng, max_rows=2, max_cols=2)
        ring = M.algebra.ring
        name = rng.choice(ring.variables)
        if rng.random() < 0.5:
            image = ring.zero()
        else:
            image = ring.variable(name) + ring.constant(rng.randint(1, 3))
        mapping = {name: image}
        M2 = base_change(M, mapping, ring)
        ok = True
        for i in range(0, M.generator_count + 1):
            pushed = Ideal(
                ring,
                [g.substitute(ring, mapping) for g in fitting_ideal(M, i).generators]
                + list(M2.algebra.relations.generators),
            )
            ok = ok and ideal_equal(fitting_ideal(M2, i), pushed)
        result.check(ok, lambda: f"base change along {name} broke over {ring}")
    return result


def suite_annihilator_diagonal(seed: int, trials: int = 20) -> SuiteResult:
    """For diagonal presentations diag(a_1..a_m): with b = Ann(M) computed as
    the intersection of the (a_i), check b*Fitt_{i+1} inside Fitt_i, and the
    standard containments Fitt_0 inside b and b^m inside Fitt_0."""
    rng = random.Random(seed)
    result = SuiteResult("annihilator-diagonal")
    for _ in range(trials):
        ring = _rand_ring(rng, fields=_FIELDS, max_vars=3)
        m = rng.randint(1, 3)
        diag = []
        for _ in range(m):
            f = _rand_poly(rng, ring, max_terms=2, max_deg=2)
            while f.is_zero:
                f = _rand_poly(rng, ring, max_terms=2, max_deg=2)
            diag.append(f)
        algebra = PresentedAlgebra(ring, Ideal(ring))
        matrix = tuple(
            tuple(diag[i] if i == j else ring.zero() for j in range(m)) for i in range(m)
        )
        M = PresentedModule(algebra, matrix, tuple(f"g{i + 1}" for i in range(m)))
        ann = Ideal(ring, [diag[0]])
        for a in diag[1:]:
            ann = ideal_intersect(ann, Ideal(ring, [a]))
        ok = True
        for i in range(0, m):
            prod = Ideal(
                ring,
                [b * f for b in ann.generators for f in fitting_ideal(M, i + 1).generators],
            )
            ok = ok and ideal_contains(fitting_ideal(M, i), prod)
        fitt0 = fitting_ideal(M, 0)
        ok = ok and ideal_contains(ann, fitt0)
        ann_power = Ideal(ring, [ring.one()])
        for _ in range(m):
            ann_power = Ideal(
                ring, [a * b for a in ann_power.generators for b in ann.generators]
            )
        ok = ok and ideal_contains(fitt0, ann_power)
        result.check(ok, lambda: f"annihilator law broke for diag {[str(d) for d in diag]}")
    return result


def suite_kaehler_redundant_generator(seed: int, trials: int = 25) -> SuiteResult:
    """Adding an ambient multiple of an existing relation generator leaves
    every Fitting ideal of the differentials unchanged."""
    rng = random.Random(seed)
    result = SuiteResult("kaehler-redundant-generator")
    for _ in range(trials):
        ring = _rand_ring(rng, max_vars=3)
        f = _rand_poly(rng, ring, max_terms=2, max_deg=3)
        while f.is_zero:
            f = _rand_poly(rng, ring, max_terms=2, max_deg=3)
        g = _rand_poly(rng, ring, max_terms=2, max_deg=2)
        A = PresentedAlgebra(ring, Ideal(ring, [f]))
        B = PresentedAlgebra(ring, Ideal(ring, [f, g * f]))
        ok = all(
            ideal_equal(kaehler_fitting(A, i), kaehler_fitting(B, i))
            for i in range(0, ring.nvars + 1)
        )
        result.check(ok, lambda: f"redundant generator changed a Fitting ideal for f={f}, g={g}")
    return result


_SUITES: tuple[tuple[str, Callable[[int], SuiteResult]], ...] = (
    ("ring-axioms", suite_ring_axioms),
    ("leibniz", suite_leibniz),
    ("frobenius-kill", suite_frobenius_kill),
    ("monomial-orders", suite_monomial_orders),
    ("parser-roundtrip", suite_parser_roundtrip),
    ("groebner-reduced-basis", suite_groebner_reduced),
    ("groebner-spolys", suite_groebner_spolys),
    ("member-order-invariance", suite_member_order_invariance),
    ("saturation-laws", suite_saturation_laws),
    ("localized-equivalence", suite_localized_equivalence),
    ("fitting-chain", suite_fitting_chain),
    ("fitting-shift", suite_fitting_shift),
    ("fitting-presentation-independence", suite_fitting_presentation_independence),
    ("fitting-base-change", suite_fitting_base_change),
    ("annihilator-diagonal", suite_annihilator_diagonal),
    ("kaehler-redundant-generator", suite_kaehler_redundant_generator),
)


def run_properties(seed: int = DEFAULT_SEED) -> list[SuiteResult]:
    """Run every suite with per-suite seeds derived from the run seed."""
    return [fn(seed + 1000 * i) for i, (_, fn) in enumerate(_SUITES)]


def properties_ok(results: Iterable[SuiteResult]) -> bool:
    return all(r.failures == 0 for r in results)
