"""Cable transforms of knot invariants and rational-concordance obstructions.

A (p,1)-cable leaves the Alexander polynomial and the signature function
almost untouched: delta goes to delta(t^p) and the signature step function
pulls back along omega -> omega^p.  Those two transforms power three
obstruction procedures for the question "can K be rationally concordant
to K(p,1)?":

* a search for a root of unity omega with sigma(omega) = 0 but
  sigma(omega^p) != 0, which rules out topological rational concordance
  for knots of finite algebraic order;
* the Fox-Milnor norm condition on delta_0(t^k) * delta_1(t^k), checked
  for every complexity k up to a bound;
* a tau comparison, which obstructs smooth rational concordance even
  between topologically slice knots.

Knots enter as profiles: the computable data (Seifert matrix, Alexander
polynomial) plus declared literature values (tau, s, genus bounds,
topological sliceness), each carrying its citation.  Reports carry typed
witnesses that can be re-verified independently: a root of unity with its
two signature values, a violating irreducible factor, or a tau mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, doteq, fox_milnor_pairing, substitute_power
from .seifert import (
    RootOfUnity,
    SeifertMatrix,
    SignatureFunction,
    _assemble_signature_function,
    _compact_coeffs,
    _int_coeffs,
    alexander,
    signature_function,
)

__all__ = [
    "Cited",
    "CitedBounds",
    "KnotProfile",
    "MissingAlexander",
    "MissingSeifert",
    "MissingTau",
    "ObstructionReport",
    "Witness",
    "cable_alexander",
    "cable_profile",
    "cable_signature",
    "finite_order_obstruction",
    "fox_milnor_obstruction",
    "profile_signature",
    "rational_concordance_verdict",
    "tau_cable_rule",
]


class MissingSeifert(ValueError):
    """The operation needs a Seifert matrix the profile does not have."""


class MissingAlexander(ValueError):
    """The operation needs an Alexander polynomial the profile does not have."""


class MissingTau(ValueError):
    """The operation needs a declared tau value the profile does not have."""


TAU_CABLE_CITATION = (
    "tau(K(p,1)) = p*tau(K): Hedden, 'On knot Floer homology and cabling', "
    "Theorem 1.2"
)
TRIVIAL_ALEXANDER_CITATION = (
    "trivial Alexander polynomial implies topologically slice: "
    "Freedman and Quinn, 'Topology of 4-Manifolds'"
)
ALL_K_IRREDUCIBILITY_CITATION = (
    "irreducibility of delta(t^k) for every k >= 1 for twist-knot "
    "polynomials: Cha, 'The structure of the rational concordance group "
    "of knots', Mem. Amer. Math. Soc. 189 (2007), Prop. 3.18"
)


@dataclass(frozen=True)
class Cited:
    """A declared value paired with the literature reference backing it."""

    value: object
    citation: str

    def __post_init__(self):
        if not isinstance(self.citation, str) or not self.citation.strip():
            raise ValueError("a declared value must carry a citation")


@dataclass(frozen=True)
class CitedBounds:
    """Declared integer bounds (either side optional) with their citation."""

    lower: int | None
    upper: int | None
    citation: str

    def __post_init__(self):
        if not isinstance(self.citation, str) or not self.citation.strip():
            raise ValueError("declared bounds must carry a citation")
        if self.lower is None and self.upper is None:
            raise ValueError("bounds need at least one side")
        for side in (self.lower, self.upper):
            if side is not None and (not isinstance(side, int) or side < 0):
                raise ValueError("genus bounds must be nonnegative integers")
        if self.lower is not None and self.upper is not None:
            if self.lower > self.upper:
                raise ValueError("lower bound exceeds upper bound")


@dataclass(frozen=True)
class KnotProfile:
    """A knot's computable data plus cited literature values.

    The Alexander polynomial is computed from the Seifert matrix when one
    is present (a declared polynomial is then cross-checked against it);
    otherwise it may be declared directly, as happens for cables.  Profiles
    built by :func:`cable_profile` remember their companion in ``cable_of``
    so the signature function can be obtained by pullback even though no
    Seifert matrix for the cable is stored.
    """

    name: str
    seifert: SeifertMatrix | None = None
    alexander: LaurentPoly | None = None
    declared_tau: Cited | None = None
    declared_s: Cited | None = None
    declared_genus: Cited | None = None
    declared_slice_genus: CitedBounds | None = None
    topologically_slice: Cited | None = None
    cable_of: tuple["KnotProfile", int] | None = None

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("a profile needs a nonempty name")
        if self.seifert is not None:
            computed = alexander(self.seifert)
            if self.alexander is not None and not doteq(self.alexander, computed):
                raise ValueError(
                    f"declared Alexander polynomial of {self.name!r} does not "
                    f"match the Seifert matrix (expected {computed})"
                )
            # store the balanced normal form so downstream code can rely on it
            object.__setattr__(self, "alexander", computed)
        if self.declared_genus is not None:
            g = self.declared_genus.value
            if not isinstance(g, int) or g < 0:
                raise ValueError("declared genus must be a nonnegative integer")
        if self.declared_tau is not None and not isinstance(
            self.declared_tau.value, int
        ):
            raise ValueError("declared tau must be an integer")
        if self.declared_s is not None and not isinstance(self.declared_s.value, int):
            raise ValueError("declared s must be an integer")
        self._check_bounds()
        if self.cable_of is not None:
            base, p = self.cable_of
            if not isinstance(base, KnotProfile) or not isinstance(p, int) or p < 1:
                raise ValueError("cable_of must be (profile, positive integer)")

    def _check_bounds(self):
        g4 = self.declared_slice_genus
        if g4 is None:
            return
        if self.declared_genus is not None and g4.upper is not None:
            if g4.upper > self.declared_genus.value:
                raise ValueError(
                    f"{self.name!r}: slice genus bound {g4.upper} exceeds "
                    f"genus {self.declared_genus.value}"
                )
        if self.declared_tau is not None and g4.upper is not None:
            if abs(self.declared_tau.value) > g4.upper:
                raise ValueError(
                    f"{self.name!r}: |tau| = {abs(self.declared_tau.value)} "
                    f"exceeds slice genus bound {g4.upper}"
                )


@dataclass(frozen=True)
class Witness:
    """One independently checkable piece of evidence inside a report."""

    kind: str
    data: dict

    def describe(self) -> str:
        inner = ", ".join(f"{k} = {v}" for k, v in self.data.items())
        return f"{self.kind}: {inner}"


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of an obstruction procedure.

    ``verdict`` is one of ``obstructed``, ``obstructed-up-to-complexity-k``
    (the Fox-Milnor search is existential in k, so a bounded search can
    only exclude bounded complexities), ``consistent-up-to-bounds``, or
    ``no-obstruction-found``.  ``category`` records which kind of
    concordance the evidence obstructs: ``smooth`` (tau), ``topological``
    (signatures, Fox-Milnor), or None when nothing was obstructed.
    """

    verdict: str
    category: str | None
    witnesses: tuple
    parameters: dict
    notes: tuple = ()

    def __post_init__(self):
        if self.verdict.startswith("obstructed") and not self.witnesses:
            raise ValueError("an obstructed verdict needs at least one witness")


def cable_alexander(delta: LaurentPoly, p: int) -> LaurentPoly:
    """Alexander polynomial of the (p,1)-cable: delta(t) -> delta(t^p)."""
    if not isinstance(p, int) or p < 1:
        raise ValueError("cable parameter p must be a positive integer")
    return substitute_power(delta, p)


def cable_signature(sig: SignatureFunction, p: int) -> SignatureFunction:
    """Signature function of the (p,1)-cable: the pullback along omega^p.

    The cabled step function satisfies sigma_cable(omega) = sigma(omega^p);
    its jump angles are the p-th roots of the original jump angles, so the
    arcs are re-isolated from delta(t^p) and each new arc is sampled through
    the original function.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError("cable parameter p must be a positive integer")
    if p == 1:
        return sig
    ints = sig._delta
    g = (len(ints) - 1) // 2
    delta = LaurentPoly({e - g: c for e, c in enumerate(ints)})
    pulled = substitute_power(delta, p)
    # a sample angle avoiding the pullback's jumps maps to a non-jump of sig
    return _assemble_signature_function(
        _int_coeffs(pulled),
        _compact_coeffs(pulled),
        lambda q: sig.evaluate((p * q) % 1),
    )


def profile_signature(K: KnotProfile) -> SignatureFunction:
    """Signature function of a profile, through the cable pullback if needed."""
    if K.seifert is not None:
        return signature_function(K.seifert)
    if K.cable_of is not None:
        base, p = K.cable_of
        return cable_signature(profile_signature(base), p)
    raise MissingSeifert(
        f"{K.name!r} has no Seifert matrix and is not a cable of a profile "
        "that has one"
    )


def cable_profile(K: KnotProfile, p: int) -> KnotProfile:
    """Profile of the (p,1)-cable of K.

    Carries the cabled Alexander polynomial and a back reference for
    signature pullbacks.  Topological sliceness is propagated only through
    the one rule that needs no further input: a trivial Alexander
    polynomial is topologically slice.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError("cable parameter p must be a positive integer")
    delta = None if K.alexander is None else cable_alexander(K.alexander, p)
    slice_note = None
    if delta is not None and doteq(delta, LaurentPoly.one()):
        slice_note = Cited(True, TRIVIAL_ALEXANDER_CITATION)
    return KnotProfile(
        name=f"{K.name}({p},1)",
        alexander=delta,
        topologically_slice=slice_note,
        cable_of=(K, p),
    )


def tau_cable_rule(K: KnotProfile, p: int) -> KnotProfile:
    """Profile of K(p,1) with tau propagated by the cabling formula.

    The rule tau(K(p,1)) = p*tau(K) is a cited literature fact, applied
    only when the base profile declares tau; the resulting citation chains
    the rule's reference onto the base value's reference.
    """
    if K.declared_tau is None:
        raise MissingTau(f"{K.name!r} declares no tau value")
    cable = cable_profile(K, p)
    tau = Cited(
        p * K.declared_tau.value,
        f"{TAU_CABLE_CITATION}; base value: {K.declared_tau.citation}",
    )
    return KnotProfile(
        name=cable.name,
        alexander=cable.alexander,
        declared_tau=tau,
        topologically_slice=cable.topologically_slice,
        cable_of=cable.cable_of,
    )


def _primes_upto(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


def finite_order_obstruction(
    K: KnotProfile, p: int, denominator_bound: int = 211
) -> ObstructionReport:
    """Search for omega with sigma(omega) = 0 but sigma(omega^p) != 0.

    Such an omega shows K is not rationally concordant to K(p,1) in the
    topological category, because rational concordance forces the two
    signature functions to agree away from jumps.  The search runs over
    omega = exp(2 pi i a/b) with b prime up to ``denominator_bound``, in
    increasing b then increasing a, skipping jump angles of the signature
    function and of its pullback; the first hit is reported.
    """
    if not isinstance(p, int) or p < 2:
        raise ValueError("the cable obstruction needs an integer p >= 2")
    sig = profile_signature(K)
    parameters = {"p": p, "denominator_bound": denominator_bound, "knot": K.name}
    for b in _primes_upto(denominator_bound):
        if p % b == 0:
            continue  # omega^p = 1 for no a; and a/b, pa/b share denominator b
        if sig.is_jump(Fraction(1, b)):
            continue  # jumping depends only on the denominator for prime b
        for a in range(1, b):
            q = Fraction(a, b)
            if sig.evaluate(q) != 0:
                continue
            power_value = sig.evaluate((p * q) % 1)
            if power_value == 0:
                continue
            witness = Witness(
                "signature-at-root-of-unity",
                {
                    "omega": RootOfUnity(a, b),
                    "p": p,
                    "sigma_at_omega": 0,
                    "sigma_at_omega_power": power_value,
                },
            )
            return ObstructionReport(
                verdict="obstructed",
                category="topological",
                witnesses=(witness,),
                parameters=parameters,
                notes=(
                    "sigma(omega) = 0 with sigma(omega^p) != 0 rules out "
                    f"topological rational concordance of {K.name!r} to its "
                    f"({p},1)-cable",
                ),
            )
    return ObstructionReport(
        verdict="no-obstruction-found",
        category=None,
        witnesses=(),
        parameters=parameters,
        notes=(
            f"no witness among angles a/b with b prime, b <= {denominator_bound}",
        ),
    )


def fox_milnor_obstruction(
    K0: KnotProfile, K1: KnotProfile, k_max: int = 6
) -> ObstructionReport:
    """Norm test on delta_0(t^k) * delta_1(t^k) for each k up to k_max.

    Rational concordance of complexity k forces the product to be a norm
    f(t) * f(1/t) up to units.  Some k passing is therefore consistency,
    not proof; every k failing excludes rational concordance of every
    complexity up to k_max, and only up to k_max, since the underlying
    condition is existential in k.
    """
    if not isinstance(k_max, int) or k_max < 1:
        raise ValueError("k_max must be a positive integer")
    for K in (K0, K1):
        if K.alexander is None:
            raise MissingAlexander(f"{K.name!r} has no Alexander polynomial")
    parameters = {"k_max": k_max, "knots": (K0.name, K1.name)}
    violations = []
    for k in range(1, k_max + 1):
        product = substitute_power(K0.alexander, k) * substitute_power(
            K1.alexander, k
        )
        result = fox_milnor_pairing(product)
        if result.is_norm:
            witness = Witness(
                "fox-milnor-norm",
                {"k": k, "f": result.witness},
            )
            return ObstructionReport(
                verdict="consistent-up-to-bounds",
                category=None,
                witnesses=(witness,),
                parameters=parameters,
                notes=(
                    f"delta_0(t^k) * delta_1(t^k) is a norm at k = {k}; this "
                    "is consistent with rational concordance, not a proof",
                ),
            )
        if result.violating_factor is not None:
            violations.append(
                Witness(
                    "fox-milnor-violation",
                    {
                        "k": k,
                        "factor": result.violating_factor,
                        "multiplicity": result.violating_multiplicity,
                        "reason": "self-reciprocal factor with odd multiplicity"
                        if doteq(
                            result.violating_factor,
                            result.violating_factor.reciprocal(),
                        )
                        else "factor unmatched by its reciprocal",
                    },
                )
            )
        else:
            violations.append(
                Witness(
                    "fox-milnor-violation",
                    {
                        "k": k,
                        "content": result.violating_content,
                        "reason": "content is not a perfect square",
                    },
                )
            )
    return ObstructionReport(
        verdict=f"obstructed-up-to-complexity-{k_max}",
        category="topological",
        witnesses=tuple(violations),
        parameters=parameters,
        notes=(
            f"every complexity k <= {k_max} fails the norm condition; "
            "complexities beyond the bound need an all-k argument, "
            "e.g. " + ALL_K_IRREDUCIBILITY_CITATION,
        ),
    )


def _signature_mismatch(
    sig0: SignatureFunction, sig1: SignatureFunction, denominator_bound: int
) -> Witness | None:
    """First prime-denominator angle where two signature functions differ."""
    if sig0.is_identically_zero() and sig1.is_identically_zero():
        return None
    if sig0._delta == sig1._delta and sig0._values == sig1._values:
        return None  # same polynomial and arc values: the functions coincide
    for b in _primes_upto(denominator_bound):
        one_b = Fraction(1, b)
        if sig0.is_jump(one_b) or sig1.is_jump(one_b):
            continue
        for a in range(1, b):
            q = Fraction(a, b)
            v0 = sig0.evaluate(q)
            v1 = sig1.evaluate(q)
            if v0 != v1:
                return Witness(
                    "signature-mismatch",
                    {"omega": RootOfUnity(a, b), "sigma_0": v0, "sigma_1": v1},
                )
    return None


def rational_concordance_verdict(
    K0: KnotProfile,
    K1: KnotProfile,
    k_max: int = 6,
    denominator_bound: int = 211,
) -> ObstructionReport:
    """Aggregate every applicable obstruction to rational concordance.

    Smooth-category evidence is the tau comparison; topological-category
    evidence is the signature comparison and the Fox-Milnor test.  A hard
    witness (tau mismatch or signature mismatch) yields ``obstructed``;
    failing Fox-Milnor at every k <= k_max alone yields the bounded
    verdict; otherwise ``no-obstruction-found``.  Missing data silently
    shrinks the evidence set, recorded in the notes.  The verdict is
    symmetric in the argument order.
    """
    parameters = {
        "knots": (K0.name, K1.name),
        "k_max": k_max,
        "denominator_bound": denominator_bound,
    }
    witnesses: list[Witness] = []
    notes: list[str] = []
    category = None

    if K0.declared_tau is not None and K1.declared_tau is not None:
        t0, t1 = K0.declared_tau.value, K1.declared_tau.value
        if t0 != t1:
            witnesses.append(
                Witness(
                    "tau-mismatch",
                    {
                        "tau_0": t0,
                        "tau_1": t1,
                        "citations": (
                            K0.declared_tau.citation,
                            K1.declared_tau.citation,
                        ),
                    },
                )
            )
            category = "smooth"
            notes.append(
                "tau is a smooth rational concordance invariant; "
                f"{t0} != {t1} obstructs smooth rational concordance"
            )
    else:
        notes.append("tau comparison unavailable: not declared for both knots")

    try:
        sig0 = profile_signature(K0)
        sig1 = profile_signature(K1)
    except MissingSeifert as missing:
        notes.append(f"signature comparison unavailable: {missing}")
    else:
        mismatch = _signature_mismatch(sig0, sig1, denominator_bound)
        if mismatch is not None:
            witnesses.append(mismatch)
            category = "topological"
            notes.append(
                "the signature functions differ away from jumps, which "
                "obstructs topological rational concordance"
            )

    fox_milnor = None
    if K0.alexander is not None and K1.alexander is not None:
        fox_milnor = fox_milnor_obstruction(K0, K1, k_max=k_max)
        if fox_milnor.verdict == "consistent-up-to-bounds":
            notes.extend(fox_milnor.notes)
    else:
        notes.append("Fox-Milnor test unavailable: missing Alexander polynomial")

    if K0.topologically_slice is not None and K1.topologically_slice is not None:
        if K0.topologically_slice.value and K1.topologically_slice.value:
            notes.append(
                "both knots are topologically slice "
                f"({K0.topologically_slice.citation}; "
                f"{K1.topologically_slice.citation})"
            )

    if witnesses:
        return ObstructionReport(
            verdict="obstructed",
            category=category,
            witnesses=tuple(witnesses),
            parameters=parameters,
            notes=tuple(notes),
        )
    if fox_milnor is not None and fox_milnor.verdict.startswith("obstructed"):
        return ObstructionReport(
            verdict=fox_milnor.verdict,
            category=fox_milnor.category,
            witnesses=fox_milnor.witnesses,
            parameters=parameters,
            notes=tuple(notes) + fox_milnor.notes,
        )
    return ObstructionReport(
        verdict="no-obstruction-found",
        category=None,
        witnesses=(),
        parameters=parameters,
        notes=tuple(notes),
    )
