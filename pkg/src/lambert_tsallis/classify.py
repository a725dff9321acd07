"""Arithmetic-nature classification for values of the deformed functions.

Verdicts are produced by a guarded decision procedure over exact inputs
(`exact.ExactNumber`); floating point is never consulted for a verdict.
Every Transcendental verdict cites a rule whose hypotheses were checked
exactly on the inputs, so a verdict is never wrong; when no rule applies
the result is the legal verdict Unknown with rule GuardFallthrough.

The rules:

* Theorem1: q algebraic irrational  =>  W_q(1) transcendental.
* Theorem2: q algebraic irrational, z nonzero algebraic with
  1 + (1-q) z > 0  =>  exp_q(z) transcendental (Gelfond-Schneider with
  base 1 + (1-q) z and exponent 1/(1-q)).
* Theorem3: q algebraic irrational, z nonzero algebraic  =>  W_q(z)
  transcendental (else exp_q(W) = z/W would contradict the Theorem-2
  argument).
* Theorem4: q algebraic irrational, z0 positive algebraic, z0 != 1  =>
  d ln_q/dz at z0, i.e. z0^(-q), transcendental.
* Theorem5: q rational != 1, z in {e, pi} with 1 + (1-q) z > 0  =>
  exp_q(z) transcendental (transcendental base to a nonzero rational
  power).  The bracket sign is decided exactly against certified rational
  enclosures of e and pi; a negative bracket is the cutoff, value 0.
* Theorem6: r rational, non-integer, positive  =>  the right-associative
  tower r^(r^r) is transcendental (r^r is algebraic irrational, then
  Gelfond-Schneider).

Decision orders are fixed and documented on each function; the chosen rule
is a pure function of the input variants.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError, UnsupportedFieldError
from .exact import (ONE, ZERO, ArithmeticClass, ExactNumber, NamedTranscendental,
                    QuadSurd, Rational, add, classify_number, div, is_algebraic,
                    is_zero, mul, normalize, rational_bounds, render_exact, sign, sub)

__all__ = [
    "Rule",
    "Classification",
    "classify_expq",
    "classify_wq",
    "classify_lnq_derivative",
    "classify_tower",
]


class Rule(Enum):
    THEOREM_1 = "theorem1"
    THEOREM_2 = "theorem2"
    THEOREM_3 = "theorem3"
    THEOREM_4 = "theorem4"
    THEOREM_5 = "theorem5"
    THEOREM_6 = "theorem6"
    CLASSICAL_EXP = "classical_exp"
    CLASSICAL_W1 = "classical_w1"
    CLOSED_FORM_Q2 = "closed_form_q2"
    CUTOFF_ZERO = "cutoff_zero"
    EXACT_VALUE = "exact_value"
    GUARD_FALLTHROUGH = "guard_fallthrough"


@dataclass(frozen=True)
class Classification:
    verdict: ArithmeticClass
    rule: Rule
    justification: str
    exact_value: ExactNumber | None = None

    def to_record(self) -> dict:
        """Structured record for serialization (exact_value in the text grammar)."""
        return {
            "verdict": self.verdict.value,
            "rule": self.rule.value,
            "justification": self.justification,
            "exact_value": None if self.exact_value is None
            else render_exact(self.exact_value),
        }


def _unknown(reason: str) -> Classification:
    return Classification(ArithmeticClass.UNKNOWN, Rule.GUARD_FALLTHROUGH, reason)


def _is_rat(x: ExactNumber) -> bool:
    return isinstance(x, Rational)


def _is_surd(x: ExactNumber) -> bool:
    return isinstance(x, QuadSurd)


def _is_named(x: ExactNumber) -> bool:
    return isinstance(x, NamedTranscendental)


def _bracket_sign_algebraic(q: ExactNumber, z: ExactNumber) -> int | None:
    """Exact sign of 1 + (1-q) z for algebraic q, z; None if the two surd
    bases differ (single-surd arithmetic cannot place them in one field)."""
    try:
        return sign(add(ONE, mul(sub(ONE, q), z)))
    except UnsupportedFieldError:
        return None


def _bracket_sign_named(q: Rational, z: NamedTranscendental) -> int | None:
    """Exact sign of 1 + (1-q) z for rational q and z in {e, pi}, decided by
    interval arithmetic over a certified rational enclosure of z.  None in
    the (practically unreachable) case that the enclosure straddles zero."""
    lo, hi = rational_bounds(z)
    coeff = 1 - q.value
    ends = (1 + coeff * lo, 1 + coeff * hi)
    if min(ends) > 0:
        return 1
    if max(ends) < 0:
        return -1
    return None


def classify_expq(q: ExactNumber, z: ExactNumber) -> Classification:
    """Arithmetic nature of exp_q(z) for exact q, z.

    Decision order: (a) z = 0 -> Rational(1); (b) q = 1, z algebraic ->
    ClassicalExp; (c) q != 1 algebraic, z algebraic, bracket sign < 0 ->
    CutoffZero (= 0 exactly; a vanishing bracket degenerates and falls
    through); (d) q algebraic irrational, z nonzero algebraic, bracket > 0
    -> Theorem2; (e) q rational != 1, z in {e, pi} -> Theorem5 behind the
    same cutoff guard; (f) otherwise Unknown.
    """
    q, z = normalize(q), normalize(z)
    if is_zero(z):
        return Classification(
            ArithmeticClass.RATIONAL, Rule.EXACT_VALUE,
            "exp_q(0) = 1 exactly for every deformation q.", ONE)
    if q == ONE and is_algebraic(z):
        return Classification(
            ArithmeticClass.TRANSCENDENTAL, Rule.CLASSICAL_EXP,
            f"q = 1 is the classical exponential and z = {render_exact(z)} is a "
            "nonzero algebraic number, so e^z is transcendental "
            "(Hermite-Lindemann).")
    if is_algebraic(q) and q != ONE and is_algebraic(z):
        s = _bracket_sign_algebraic(q, z)
        if s is None:
            return _unknown(
                f"q = {render_exact(q)} and z = {render_exact(z)} live in distinct "
                "quadratic fields; the cutoff sign 1 + (1-q) z is not decidable in "
                "single-surd arithmetic, so no rule applies.")
        if s < 0:
            return Classification(
                ArithmeticClass.RATIONAL, Rule.CUTOFF_ZERO,
                f"1 + (1-q) z < 0 (exact sign), so exp_q({render_exact(z)}) sits in "
                "the cutoff region and equals 0 exactly.", ZERO)
        if s == 0:
            return _unknown(
                "1 + (1-q) z = 0 exactly: the power degenerates at the cutoff "
                "boundary (0 for q < 1, divergent for q > 1) and no rule applies.")
        if _is_surd(q):
            return Classification(
                ArithmeticClass.TRANSCENDENTAL, Rule.THEOREM_2,
                f"q = {render_exact(q)} is algebraic irrational and z = "
                f"{render_exact(z)} is nonzero algebraic with 1 + (1-q) z > 0; the "
                "base 1 + (1-q) z is algebraic, neither 0 nor 1, and the exponent "
                "1/(1-q) is algebraic irrational, so Gelfond-Schneider makes "
                "exp_q(z) transcendental.")
        # q rational != 1 with algebraic z: the exponent 1/(1-q) is rational,
        # Gelfond-Schneider does not reach it
    if _is_rat(q) and q != ONE and _is_named(z):
        s = _bracket_sign_named(q, z)
        if s is not None and s < 0:
            return Classification(
                ArithmeticClass.RATIONAL, Rule.CUTOFF_ZERO,
                f"1 + (1-q) {render_exact(z)} < 0 (certified enclosure), so the "
                "value sits in the cutoff region and equals 0 exactly.", ZERO)
        if s is not None and s > 0:
            return Classification(
                ArithmeticClass.TRANSCENDENTAL, Rule.THEOREM_5,
                f"z = {render_exact(z)} is transcendental and q is rational with "
                "q != 1, and 1 + (1-q) z > 0 (certified enclosure): the base "
                "1 + (1-q) z is transcendental and the exponent 1/(1-q) is a "
                "nonzero rational, so exp_q(z) is transcendental.")
        return _unknown(
            "the enclosure of 1 + (1-q) z straddles zero; the cutoff guard "
            "cannot be decided.")
    return _unknown(
        f"no decision rule covers q = {render_exact(q)}, z = {render_exact(z)} "
        "(a rational deformation of an algebraic argument, a transcendental "
        "deformation, or an unguarded combination).")


def classify_wq(q: ExactNumber, z: ExactNumber) -> Classification:
    """Arithmetic nature of W_q(z) on the real branch, for exact q, z.

    Decision order: (a) z = 0 -> Rational(0); (b) q = 2 -> exact closed
    form z/(1+z) by field arithmetic (domain error at and below the pole
    z = -1); (c) q = 1, z = 1 -> ClassicalW1; (d) q algebraic irrational,
    z = 1 -> Theorem1; (e) q algebraic irrational, z nonzero algebraic ->
    Theorem3; (f) otherwise Unknown.
    """
    q, z = normalize(q), normalize(z)
    if is_zero(z):
        return Classification(
            ArithmeticClass.RATIONAL, Rule.EXACT_VALUE,
            "W_q(0) = 0 exactly for every q (0 is the only solution of "
            "w exp_q(w) = 0 on the principal branch).", ZERO)
    if q == Rational(Fraction(2)) and is_algebraic(z):
        if sign(add(ONE, z)) <= 0:
            raise DomainError(
                f"W_2(z) = z/(1+z) has a pole at z = -1 and no real value for "
                f"z <= -1; got z = {render_exact(z)}")
        value = div(z, add(ONE, z))
        return Classification(
            classify_number(value), Rule.CLOSED_FORM_Q2,
            f"q = 2 has the closed form W_2(z) = z/(1+z) = {render_exact(value)}; "
            "its arithmetic class is read off the exact value.", value)
    if q == ONE and z == ONE:
        return Classification(
            ArithmeticClass.TRANSCENDENTAL, Rule.CLASSICAL_W1,
            "q = 1, z = 1: W(1) is the omega constant, transcendental "
            "(were it algebraic, e^W(1) = 1/W(1) would contradict "
            "Lindemann-Weierstrass).")
    if _is_surd(q) and z == ONE:
        return Classification(
            ArithmeticClass.TRANSCENDENTAL, Rule.THEOREM_1,
            f"q = {render_exact(q)} is algebraic irrational; x = W_q(1) satisfies "
            "x^(q-1) - (1-q) x - 1 = 0 with 0 < x != 1, so an algebraic x would "
            "make x^(q-1) transcendental by Gelfond-Schneider (exponent q-1 "
            "algebraic irrational) while (1-q) x + 1 stays algebraic: "
            "contradiction, hence W_q(1) is transcendental.")
    if _is_surd(q) and is_algebraic(z):
        return Classification(
            ArithmeticClass.TRANSCENDENTAL, Rule.THEOREM_3,
            f"q = {render_exact(q)} is algebraic irrational and z = "
            f"{render_exact(z)} is nonzero algebraic; were W_q(z) algebraic, "
            "exp_q(W_q(z)) = z/W_q(z) would be algebraic, contradicting the "
            "Theorem-2 argument at the nonzero algebraic argument W_q(z) "
            "(the bracket 1 + (1-q) W is positive wherever the branch value "
            "exists).")
    return _unknown(
        f"no decision rule covers q = {render_exact(q)}, z = {render_exact(z)} "
        "(rational q other than the q = 2 closed form, or a transcendental "
        "input, leaves the value unresolved).")


def classify_lnq_derivative(q: ExactNumber, z0: ExactNumber) -> Classification:
    """Arithmetic nature of d ln_q/dz at z0, i.e. of z0^(-q).

    Decision order: (a) z0 = 1 -> Rational(1), the Gelfond-Schneider base-1
    guard; (b) q algebraic irrational, z0 positive algebraic != 1 ->
    Theorem4; (c) q a rational integer, z0 rational -> exact power;
    (d) otherwise Unknown.  z0 <= 0 is a domain error.
    """
    q, z0 = normalize(q), normalize(z0)
    if is_algebraic(z0) and sign(z0) <= 0:
        raise DomainError(
            f"the deformed logarithm needs z0 > 0, got z0 = {render_exact(z0)}")
    if z0 == ONE:
        return Classification(
            ArithmeticClass.RATIONAL, Rule.EXACT_VALUE,
            "z0 = 1 gives 1^(-q) = 1 exactly; base 1 is excluded from "
            "Gelfond-Schneider, so the transcendence rule deliberately does "
            "not fire here.", ONE)
    if _is_surd(q) and is_algebraic(z0):
        return Classification(
            ArithmeticClass.TRANSCENDENTAL, Rule.THEOREM_4,
            f"d ln_q/dz at z0 equals z0^(-q); z0 = {render_exact(z0)} is "
            f"algebraic, positive, not 0 or 1, and -q = -({render_exact(q)}) is "
            "algebraic irrational, so Gelfond-Schneider makes the value "
            "transcendental.")
    if _is_rat(q) and q.value.denominator == 1 and _is_rat(z0):
        value = Rational(z0.value ** (-int(q.value)))
        return Classification(
            ArithmeticClass.RATIONAL, Rule.EXACT_VALUE,
            f"integer q = {q.value} gives the exact rational power z0^(-q) = "
            f"{render_exact(value)}.", value)
    return _unknown(
        f"no decision rule covers q = {render_exact(q)}, z0 = {render_exact(z0)} "
        "(non-integer rational q, a surd z0 with rational q, or a "
        "transcendental input stays unresolved).")


def classify_tower(r: ExactNumber) -> Classification:
    """Arithmetic nature of the right-associative tower r^(r^r).

    Positive non-integer rational r -> Theorem6 (transcendental).  Integer
    r >= 0 -> Unknown (the rule needs a non-integer; the tower is then a
    plain rational power, out of scope here).  Other r (negative, or with
    an irrational/transcendental base) -> Unknown when positive, domain
    error when r <= 0 (the real tower is undefined for most negative bases).
    """
    r = normalize(r)
    if _is_rat(r):
        v = r.value
        if v.denominator == 1:
            if v >= 0:
                return _unknown(
                    f"r = {v} is an integer: the tower rule requires a positive "
                    "non-integer rational (for integer r the tower is a plain "
                    "integer power and the r^r exponent is not irrational).")
            raise DomainError(
                f"unsupported base r = {v}: the real-valued tower is undefined "
                "for negative bases in general")
        if v < 0:
            raise DomainError(
                f"unsupported base r = {v}: a negative non-integer base has no "
                "real-valued tower (irrational exponent on a negative number)")
        return Classification(
            ArithmeticClass.TRANSCENDENTAL, Rule.THEOREM_6,
            f"r = {v} is a positive non-integer rational, so r^r is algebraic "
            "irrational (irrationality of rational powers of non-integer "
            "rationals, taken as given); Gelfond-Schneider with algebraic base "
            "r not 0 or 1 and algebraic irrational exponent r^r then makes the "
            "right-associative tower r^(r^r) transcendental.")
    if _is_surd(r):
        if sign(r) < 0:
            raise DomainError(
                f"unsupported base r = {render_exact(r)}: negative bases have no "
                "real-valued tower in general")
        return _unknown(
            f"r = {render_exact(r)} is a quadratic irrational; the tower rule "
            "requires r to be a non-integer rational, so it does not apply.")
    return _unknown(
        f"r = {render_exact(r)} is transcendental; the tower rule requires a "
        "positive non-integer rational base.")
