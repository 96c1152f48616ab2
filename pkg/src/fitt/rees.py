"""Rees-ring presentations for monomial complete intersections, blow-up
charts, the exceptional divisor, and the symmetric-algebra kernel check.

The standard parameter shape (p, n, s, l, v) has p dividing the exponents
v_s..v_l and a tail of exponent-1 generators v_{l+1} = ... = v_n = 1.  The
underlying constructions work for any monomial complete intersection
(x_{i1}^{e1}, ..., x_{ik}^{ek}), which the non-normality probe needs; the
parameter type is a validated wrapper around that general machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fitmod import PresentedAlgebra
from .groebner import Ideal, eliminate, transport_ideal
from .polyring import CoefficientField, PolyRing, is_prime

Powers = tuple[tuple[int, int], ...]  # ((x-index, exponent), ...), 1-based indices


class ReesParamsError(ValueError):
    """Parameter tuple violates an invariant; the message names it."""


@dataclass(frozen=True)
class ReesParams:
    """Shape (p, n, s, l, v): ideal (x_s^{v_s}, ..., x_n^{v_n}) in n variables
    over F_p, with p | v_i for s <= i <= l and v_i = 1 for i > l."""

    p: int
    n: int
    s: int
    l: int
    v: tuple[int, ...]

    def validate(self, strict_p_powers: bool = False) -> None:
        if not is_prime(self.p):
            raise ReesParamsError(f"p={self.p} is not prime")
        if self.n < 1:
            raise ReesParamsError(f"n={self.n} must be at least 1")
        if not 1 <= self.s:
            raise ReesParamsError(f"s={self.s} must be at least 1")
        if not self.s <= self.l:
            raise ReesParamsError(f"need s <= l, got s={self.s}, l={self.l}")
        if not self.l < self.n:
            raise ReesParamsError(f"need l < n, got l={self.l}, n={self.n}")
        if len(self.v) != self.n - self.s + 1:
            raise ReesParamsError(
                f"v must list exponents v_{self.s}..v_{self.n} "
                f"({self.n - self.s + 1} values, got {len(self.v)})"
            )
        for i, vi in zip(range(self.s, self.n + 1), self.v):
            if vi < 1:
                raise ReesParamsError(f"v_{i}={vi} must be at least 1")
            if i <= self.l:
                if vi % self.p != 0:
                    raise ReesParamsError(f"p={self.p} must divide v_{i}={vi}")
                if strict_p_powers and not _is_p_power(vi, self.p):
                    raise ReesParamsError(f"v_{i}={vi} must be a power of p={self.p}")
            elif vi != 1:
                raise ReesParamsError(f"v_{i}={vi} must equal 1 for i > l={self.l}")

    @property
    def field(self) -> CoefficientField:
        return CoefficientField(self.p)

    def exponent(self, i: int) -> int:
        """v_i for s <= i <= n."""
        return self.v[i - self.s]

    def powers(self) -> Powers:
        return tuple((i, self.exponent(i)) for i in range(self.s, self.n + 1))

    def flag_string(self) -> str:
        return f"p={self.p} n={self.n} s={self.s} l={self.l} v={','.join(map(str, self.v))}"

    @classmethod
    def parse(cls, text: str) -> "ReesParams":
        """Parse flag syntax `p=2 n=3 s=1 l=2 v=2,2,1`."""
        fields: dict[str, str] = {}
        for chunk in text.split():
            if "=" not in chunk:
                raise ReesParamsError(f"expected key=value, got {chunk!r}")
            key, _, value = chunk.partition("=")
            if key in fields:
                raise ReesParamsError(f"duplicate key {key!r}")
            fields[key] = value
        missing = {"p", "n", "s", "l", "v"} - fields.keys()
        if missing:
            raise ReesParamsError(f"missing keys: {', '.join(sorted(missing))}")
        extra = fields.keys() - {"p", "n", "s", "l", "v"}
        if extra:
            raise ReesParamsError(f"unknown keys: {', '.join(sorted(extra))}")
        try:
            v = tuple(int(x) for x in fields["v"].split(","))
            params = cls(int(fields["p"]), int(fields["n"]), int(fields["s"]), int(fields["l"]), v)
        except ValueError as err:
            raise ReesParamsError(f"malformed integer in {text!r}") from err
        return params


def _is_p_power(value: int, p: int) -> bool:
    while value % p == 0:
        value //= p
    return value == 1


@dataclass(frozen=True)
class ChartAlgebra:
    """Affine chart of the blow-up at the degree-one element x_r^{v_r}T:
    the degree-zero localization, presented in the x and U variables."""

    r: int
    algebra: PresentedAlgebra


# ---------------------------------------------------------------------------
# General monomial complete intersections

def ci_ambient_ring(field: CoefficientField, n: int, powers: Powers) -> PolyRing:
    """Ambient ring of the Rees presentation: x_1..x_n plus one T_i per generator."""
    names = [f"x{i}" for i in range(1, n + 1)]
    names.extend(f"T{i}" for i, _ in powers)
    return PolyRing(field, names)


def _check_powers(n: int, powers: Powers) -> None:
    seen = set()
    for i, e in powers:
        if not 1 <= i <= n:
            raise ReesParamsError(f"generator index {i} outside 1..{n}")
        if i in seen:
            raise ReesParamsError(f"repeated generator index {i}")
        if e < 1:
            raise ReesParamsError(f"exponent {e} for x{i} must be at least 1")
        seen.add(i)


def ci_rees_presentation(field: CoefficientField, n: int, powers: Powers) -> PresentedAlgebra:
    """Rees ring of (x_i^{e_i} : (i, e_i) in powers): T_i stands for x_i^{e_i}T,
    relations are the exchange binomials x_i^{e_i}*T_j - x_j^{e_j}*T_i."""
    _check_powers(n, powers)
    ring = ci_ambient_ring(field, n, powers)
    gens = []
    for a in range(len(powers)):
        i, ei = powers[a]
        for b in range(a + 1, len(powers)):
            j, ej = powers[b]
            xi = ring.variable(f"x{i}") ** ei
            xj = ring.variable(f"x{j}") ** ej
            gens.append(xi * ring.variable(f"T{j}") - xj * ring.variable(f"T{i}"))
    return PresentedAlgebra(ring, Ideal(ring, gens))


def ci_chart_ring(field: CoefficientField, n: int, powers: Powers, r: int) -> PolyRing:
    names = [f"x{i}" for i in range(1, n + 1)]
    names.extend(f"U{i}" for i, _ in powers if i != r)
    return PolyRing(field, names)


def ci_chart_presentation(field: CoefficientField, n: int, powers: Powers, r: int) -> ChartAlgebra:
    """Degree-zero localization at g = x_r^{e_r}T, by elimination: adjoin w
    with w*T_r = 1 and U_i = w*T_i, then eliminate every T and w.  U_i is the
    degree-zero fraction x_i^{e_i}T / g."""
    _check_powers(n, powers)
    if r not in {i for i, _ in powers}:
        raise ReesParamsError(f"chart index {r} is not a generator index")
    rees = ci_rees_presentation(field, n, powers)
    big = rees.ring.extended(
        [f"U{i}" for i, _ in powers if i != r] + [rees.ring.fresh_name("w")]
    )
    w = big.variable(big.variables[-1])
    gens = [g.transport(big) for g in rees.relations.generators]
    gens.append(w * big.variable(f"T{r}") - big.one())
    for i, _ in powers:
        if i != r:
            gens.append(big.variable(f"U{i}") - w * big.variable(f"T{i}"))
    block = [f"T{i}" for i, _ in powers] + [big.variables[-1]]
    contracted = eliminate(Ideal(big, gens), block)
    chart_ring = ci_chart_ring(field, n, powers, r)
    return ChartAlgebra(r, PresentedAlgebra(chart_ring, transport_ideal(contracted, chart_ring)))


def ci_micali_kernel(field: CoefficientField, n: int, powers: Powers) -> Ideal:
    """Kernel of k[x, T-block] -> R[t], T_i -> x_i^{e_i} * t, by eliminating t.
    Micali's theorem says this kernel equals the exchange-binomial ideal."""
    _check_powers(n, powers)
    ring = ci_ambient_ring(field, n, powers)
    aux = ring.fresh_name("t")
    big = ring.extended([aux])
    t = big.variable(aux)
    gens = []
    for i, e in powers:
        gens.append(big.variable(f"T{i}") - big.variable(f"x{i}") ** e * t)
    kernel = eliminate(Ideal(big, gens), [aux])
    return transport_ideal(kernel, ring)


# ---------------------------------------------------------------------------
# The parameterized (Theorem-shaped) constructions

def rees_presentation(params: ReesParams) -> PresentedAlgebra:
    """Rees ring presentation for the parameter shape; the relation ideal has
    one exchange binomial per pair s <= i < j <= n."""
    params.validate()
    return ci_rees_presentation(params.field, params.n, params.powers())


def target_ideal(params: ReesParams) -> Ideal:
    """The comparison ideal (x_s^{v_s}, ..., x_n^{v_n}, T_s, ..., T_l) plus
    the Rees relations, in the Rees ambient ring."""
    params.validate()
    algebra = rees_presentation(params)
    ring = algebra.ring
    gens = [ring.variable(f"x{i}") ** params.exponent(i) for i in range(params.s, params.n + 1)]
    gens.extend(ring.variable(f"T{i}") for i in range(params.s, params.l + 1))
    gens.extend(algebra.relations.generators)
    return Ideal(ring, gens)


def exceptional_ideal(params: ReesParams) -> Ideal:
    """Ideal of the exceptional divisor: the center's generators plus relations."""
    params.validate()
    algebra = rees_presentation(params)
    ring = algebra.ring
    gens = [ring.variable(f"x{i}") ** params.exponent(i) for i in range(params.s, params.n + 1)]
    gens.extend(algebra.relations.generators)
    return Ideal(ring, gens)


def chart_presentation(params: ReesParams, r: int) -> ChartAlgebra:
    """Chart of the blow-up at x_r^{v_r}T for s <= r <= n."""
    params.validate()
    if not params.s <= r <= params.n:
        raise ReesParamsError(f"chart index r={r} outside s..n = {params.s}..{params.n}")
    return ci_chart_presentation(params.field, params.n, params.powers(), r)


def micali_kernel(params: ReesParams) -> Ideal:
    """Relation kernel computed by elimination; contracted to the Rees ambient ring."""
    params.validate()
    return ci_micali_kernel(params.field, params.n, params.powers())
