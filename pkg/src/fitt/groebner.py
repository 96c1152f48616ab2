"""Buchberger's algorithm and the ideal toolkit built on it.

Reduction, membership, equality, elimination via block orders, saturation by
the Rabinowitsch trick, intersection via the t-trick, and comparison of ideals
after inverting an element.  Reduced Groebner bases are cached per
(ideal, order); determinism comes from the normal selection strategy with
index tie-breaks and from the uniqueness of the reduced basis.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .polyring import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    RingMismatchError,
    mono_coprime,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class Ideal:
    """A finitely generated ideal with a per-order cache of reduced bases."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {ring}")
            if g.is_zero:
                continue
            if g not in gens:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_gb", {})

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable (the GB cache fills write-once)")

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> tuple[Polynomial, ...]:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.ring, self.generators, order)
            self._gb[order] = gb
        return gb

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_unit_constant()

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"ideal({gens}) of {self.ring}"


# ---------------------------------------------------------------------------
# Division

def reduce(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Normal form of f against basis: no remainder term is divisible by any
    basis leading term, and f minus the result lies in the ideal the basis
    generates."""
    ring = f.ring
    key = ring.sort_key(order)
    divisors = []
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError(f"reducer in {g.ring}, dividend in {ring}")
        if not g.is_zero:
            lm = max(g.terms, key=key)
            divisors.append((lm, g.terms[lm], g.terms))
    p = ring.field.characteristic
    work = dict(f.terms)
    remainder: dict[Monomial, object] = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, gterms in divisors:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                factor = c * pow(lc, -1, p) % p if p else c / lc
                for gm, gc in gterms.items():
                    t = mono_mul(gm, q)
                    v = work.get(t, 0) - factor * gc
                    if p:
                        v %= p
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return Polynomial(ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """The S-polynomial, with both leading terms cancelled."""
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = mono_lcm(lmf, lmg)
    uf = f.ring.term(f.ring.field.inverse(lcf), mono_div(lcm, lmf))
    ug = f.ring.term(f.ring.field.inverse(lcg), mono_div(lcm, lmg))
    return uf * f - ug * g


# ---------------------------------------------------------------------------
# Buchberger

def buchberger(ring: PolyRing, generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> tuple[Polynomial, ...]:
    """Reduced Groebner basis: monic, pairwise interreduced, sorted ascending
    by leading monomial.  Normal selection strategy (minimal lcm total degree,
    ties by index pair); Buchberger's coprimality and chain criteria."""
    key = ring.sort_key(order)
    G: list[Polynomial] = []
    lts: list[Monomial] = []
    pending: set[tuple[int, int]] = set()

    def push(f: Polynomial) -> None:
        f = f.monic(order)
        j = len(G)
        G.append(f)
        lts.append(f.leading_term(order)[0])
        for i in range(j):
            pending.add((i, j))

    for g in generators:
        if not g.is_zero:
            push(g)

    while pending:
        best = None
        best_rank = None
        for i, j in pending:
            rank = (mono_degree(mono_lcm(lts[i], lts[j])), i, j)
            if best_rank is None or rank < best_rank:
                best_rank = rank
                best = (i, j)
        i, j = best
        pending.discard(best)
        lcm_ij = mono_lcm(lts[i], lts[j])
        if mono_coprime(lts[i], lts[j]):
            continue
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if mono_divides(lts[k], lcm_ij):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if not r.is_zero:
            push(r)

    # minimal basis: drop elements whose leading term another one divides
    order_idx = sorted(range(len(G)), key=lambda i: key(lts[i]))
    kept: list[int] = []
    for i in order_idx:
        if not any(mono_divides(lts[k], lts[i]) for k in kept):
            kept.append(i)
    minimal = [G[i] for i in kept]
    # interreduce tails
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(reduce(g, others, order).monic(order))
    reduced.sort(key=lambda g: key(g.leading_term(order)[0]))
    return tuple(reduced)


# ---------------------------------------------------------------------------
# Ideal operations

def ideal_member(f: Polynomial, I: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError(f"element in {f.ring}, ideal in {I.ring}")
    if f.is_zero:
        return True
    return reduce(f, I.groebner_basis(order), order).is_zero


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """Every generator of J lies in I."""
    return all(ideal_member(g, I) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals in {I.ring} and {J.ring}")
    return ideal_contains(I, J) and ideal_contains(J, I)


def eliminate(I: Ideal, block: Iterable[Union[str, int]]) -> Ideal:
    """Generators of I intersected with the subring on the non-block variables,
    via a block order with the block largest.  The result stays in the ambient
    ring; its generators are free of block variables."""
    ring = I.ring
    indices = frozenset(v if isinstance(v, int) else ring.index(v) for v in block)
    if not indices:
        return Ideal(ring, I.generators)
    order = MonomialOrder.elimination(indices)
    kept = []
    for g in I.groebner_basis(order):
        lm, _ = g.leading_term(order)
        if all(idx not in indices for idx, _ in lm):
            kept.append(g)
    return Ideal(ring, kept)


def transport_ideal(I: Ideal, target: PolyRing) -> Ideal:
    """Move an ideal to another ring, matching variables by name."""
    return Ideal(target, (g.transport(target) for g in I.generators))


def saturate(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g^infinity), by adjoining a fresh variable w, forming I + (w*g - 1),
    and eliminating w."""
    ring = I.ring
    if g.ring != ring:
        raise RingMismatchError(f"element in {g.ring}, ideal in {ring}")
    if g.is_zero:
        raise ValueError("cannot saturate at 0")
    if g.is_unit_constant():
        return Ideal(ring, I.generators)
    aux = ring.fresh_name("w")
    ext = ring.extended([aux])
    w = ext.variable(aux)
    gens = [h.transport(ext) for h in I.generators]
    gens.append(w * g.transport(ext) - ext.one())
    sat = eliminate(Ideal(ext, gens), [aux])
    return transport_ideal(sat, ring)


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I intersect J, by eliminating t from t*I + (1-t)*J."""
    ring = I.ring
    if J.ring != ring:
        raise RingMismatchError(f"ideals in {ring} and {J.ring}")
    aux = ring.fresh_name("t")
    ext = ring.extended([aux])
    t = ext.variable(aux)
    one_minus_t = ext.one() - t
    gens = [t * h.transport(ext) for h in I.generators]
    gens.extend(one_minus_t * h.transport(ext) for h in J.generators)
    meet = eliminate(Ideal(ext, gens), [aux])
    return transport_ideal(meet, ring)


def localized_equal(I: Ideal, J: Ideal, g: Polynomial) -> bool:
    """Whether I and J induce the same ideal after inverting g, rendered as
    equality of the g-saturations in the ambient ring."""
    return ideal_equal(saturate(I, g), saturate(J, g))
