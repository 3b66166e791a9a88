"""Exact two-variable formal series.

A series here is a finite collection of terms c * q^e * t^k where e is an
exact rational, k is an integer and c is an exact rational. Each series
carries a truncation order: every term with q-exponent <= truncation is
present and exactly correct, and no term beyond the truncation is stored.

The t variable can optionally be specialized at a root of unity of order
``modulus``; in that case t-exponents are kept reduced into [0, modulus) and
the variable stays symbolic (no cyclotomic arithmetic is ever needed).
"""

from __future__ import annotations

import cmath
import json
from fractions import Fraction


class TruncationError(ValueError):
    """A comparison was requested beyond a series' truncation order."""


def as_fraction(value):
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fraction_str(x):
    return f"{x.numerator}/{x.denominator}"


class TLaurent:
    """A Laurent polynomial in t with exact rational coefficients.

    With ``modulus`` set to 2j, t is a 2j-th root of unity and exponents are
    reduced mod 2j. Zero coefficients are never stored.
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs=None, modulus=None):
        if modulus is not None and (modulus < 2 or modulus % 2):
            raise ValueError("modulus must be a positive even integer")
        store = {}
        for e, c in (coeffs or {}).items():
            c = as_fraction(c)
            if c == 0:
                continue
            if modulus is not None:
                e %= modulus
            store[e] = store.get(e, Fraction(0)) + c
        self.coeffs = {e: c for e, c in store.items() if c != 0}
        self.modulus = modulus

    @classmethod
    def unit(cls, exponent=0, coeff=1, modulus=None):
        return cls({exponent: as_fraction(coeff)}, modulus)

    @classmethod
    def zero(cls, modulus=None):
        return cls({}, modulus)

    def is_zero(self):
        return not self.coeffs

    def items(self):
        return sorted(self.coeffs.items())

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ValueError("mixed t-moduli")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return TLaurent(out, self.modulus)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c, tshift=0):
        c = as_fraction(c)
        if c == 0:
            return TLaurent({}, self.modulus)
        return TLaurent(
            {e + tshift: x * c for e, x in self.coeffs.items()}, self.modulus
        )

    def with_modulus(self, two_j):
        """Reduce exponents mod two_j (specialize t at a 2j-th root of unity)."""
        return TLaurent(dict(self.coeffs), two_j)

    def stretch(self, k):
        """Substitute t -> t^k (requires a symbolic t)."""
        if self.modulus is not None:
            raise ValueError("cannot stretch a specialized variable")
        return TLaurent({e * k: c for e, c in self.coeffs.items()}, None)

    def at_one(self):
        """Value at t = 1, an exact rational."""
        return sum(self.coeffs.values(), Fraction(0))

    def eval_root(self, two_j=None, which=1):
        """Numeric value at t = exp(2*pi*i*which / two_j)."""
        n = two_j if two_j is not None else self.modulus
        if n is None:
            raise ValueError("no root order given for a symbolic variable")
        if self.modulus is not None and n != self.modulus:
            raise ValueError("root order must match the stored modulus")
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * which * e / n)
            for e, c in self.coeffs.items()
        )

    def __eq__(self, other):
        if not isinstance(other, TLaurent):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(fraction_str(c))
            else:
                parts.append(f"{fraction_str(c)}*t^{e}")
        body = " + ".join(parts)
        if self.modulus is not None:
            body += f" (t^{self.modulus} = 1)"
        return body

    def to_json(self):
        return [{"e": e, "c": fraction_str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data, modulus=None):
        return cls({entry["e"]: Fraction(entry["c"]) for entry in data}, modulus)


class TwoVarSeries:
    """Truncated exact series: map from rational q-exponents to TLaurent."""

    __slots__ = ("terms", "truncation", "tmodulus")

    def __init__(self, terms, truncation, tmodulus=None):
        truncation = as_fraction(truncation)
        store = {}
        for e, tl in terms.items():
            e = as_fraction(e)
            if e > truncation:
                raise ValueError(f"term q^{e} beyond truncation {truncation}")
            if tl.modulus != tmodulus:
                raise ValueError("term modulus disagrees with series modulus")
            if not tl.is_zero():
                store[e] = tl
        self.terms = store
        self.truncation = truncation
        self.tmodulus = tmodulus

    @classmethod
    def zero(cls, truncation, tmodulus=None):
        return cls({}, truncation, tmodulus)

    @classmethod
    def from_term_stream(cls, stream, truncation, tmodulus=None):
        """Accumulate (q-exponent, t-exponent, coefficient) triples.

        Terms with q-exponent beyond the truncation are dropped; collisions
        are summed exactly.
        """
        truncation = as_fraction(truncation)
        acc = {}
        for qexp, texp, coeff in stream:
            qexp = as_fraction(qexp)
            if qexp > truncation:
                continue
            coeff = as_fraction(coeff)
            if coeff == 0:
                continue
            if tmodulus is not None:
                texp %= tmodulus
            bucket = acc.setdefault(qexp, {})
            bucket[texp] = bucket.get(texp, Fraction(0)) + coeff
        terms = {
            e: TLaurent(bucket, tmodulus)
            for e, bucket in acc.items()
            if any(c != 0 for c in bucket.values())
        }
        return cls(terms, truncation, tmodulus)

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.tmodulus != other.tmodulus:
            raise ValueError("mixed t-moduli")

    def __add__(self, other):
        self._check(other)
        trunc = min(self.truncation, other.truncation)
        out = {}
        for src in (self.terms, other.terms):
            for e, tl in src.items():
                if e > trunc:
                    continue
                out[e] = out[e] + tl if e in out else tl
        out = {e: tl for e, tl in out.items() if not tl.is_zero()}
        return TwoVarSeries(out, trunc, self.tmodulus)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c, tshift=0):
        c = as_fraction(c)
        if c == 0:
            return TwoVarSeries({}, self.truncation, self.tmodulus)
        return TwoVarSeries(
            {e: tl.scale(c, tshift) for e, tl in self.terms.items()},
            self.truncation,
            self.tmodulus,
        )

    def qshift(self, delta):
        delta = as_fraction(delta)
        return TwoVarSeries(
            {e + delta: tl for e, tl in self.terms.items()},
            self.truncation + delta,
            self.tmodulus,
        )

    def rescale_q(self, factor):
        """Substitute q -> q^factor (positive integer)."""
        if factor <= 0:
            raise ValueError("factor must be positive")
        return TwoVarSeries(
            {e * factor: tl for e, tl in self.terms.items()},
            self.truncation * factor,
            self.tmodulus,
        )

    def specialize_t(self, two_j):
        """Reduce all t-exponents mod two_j (t becomes a 2j-th root of unity)."""
        out = {}
        for e, tl in self.terms.items():
            red = tl.with_modulus(two_j)
            if not red.is_zero():
                out[e] = red
        return TwoVarSeries(out, self.truncation, two_j)

    def stretch_t(self, k):
        """Substitute t -> t^k on a symbolic-t series."""
        return TwoVarSeries(
            {e: tl.stretch(k) for e, tl in self.terms.items()},
            self.truncation,
            None,
        )

    def at_t1(self):
        """Specialize t = 1: collapse every TLaurent to its coefficient sum."""
        out = {}
        for e, tl in self.terms.items():
            v = tl.at_one()
            if v != 0:
                out[e] = TLaurent({0: v})
        return TwoVarSeries(out, self.truncation, None)

    def coefficient(self, qexp, texp=None):
        tl = self.terms.get(as_fraction(qexp))
        if tl is None:
            return Fraction(0) if texp is not None else TLaurent({}, self.tmodulus)
        if texp is None:
            return tl
        if self.tmodulus is not None:
            texp %= self.tmodulus
        return tl.coeffs.get(texp, Fraction(0))

    def __repr__(self):
        head = ", ".join(f"q^{fraction_str(e)}:[{tl!r}]" for e, tl in self.items()[:6])
        more = "" if len(self.terms) <= 6 else f", ... ({len(self.terms)} exponents)"
        return f"TwoVarSeries({head}{more}; through q^{fraction_str(self.truncation)})"

    def to_json_dict(self):
        data = {
            "truncation": fraction_str(self.truncation),
            "terms": [
                {"q": fraction_str(e), "t": tl.to_json()} for e, tl in self.items()
            ],
        }
        if self.tmodulus is not None:
            data["tmod"] = self.tmodulus
        return data

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data):
        tmod = data.get("tmod")
        terms = {
            Fraction(entry["q"]): TLaurent.from_json(entry["t"], tmod)
            for entry in data["terms"]
        }
        return cls(terms, Fraction(data["truncation"]), tmod)


def laplace_transform(terms, total_order, truncation):
    """Map (z-exponent n, t-exponent m, coefficient c) triples to a series.

    Each triple contributes c * q^(n^2 / (4 * total_order)) * t^m; terms whose
    q-exponent exceeds the truncation are dropped and collisions are summed.
    """
    if total_order < 1:
        raise ValueError("total_order must be a positive integer")
    four_a = 4 * total_order
    stream = ((Fraction(n * n, four_a), m, c) for n, m, c in terms)
    return TwoVarSeries.from_term_stream(stream, truncation)


def compare(first, second, order):
    """Exact termwise comparison of two series through the given q-order.

    Returns (True, None) when all terms with q-exponent <= order agree, else
    (False, (q-exponent, t-exponent, coeff-in-first, coeff-in-second)) for the
    smallest disagreement. Raises TruncationError if either series is not
    defined through the requested order.
    """
    order = as_fraction(order)
    if first.truncation < order or second.truncation < order:
        raise TruncationError(
            f"insufficient truncation: have {first.truncation}, "
            f"{second.truncation}, need {order}"
        )
    if first.tmodulus != second.tmodulus:
        raise ValueError("mixed t-moduli")
    exps = sorted(
        e for e in set(first.terms) | set(second.terms) if e <= order
    )
    for e in exps:
        a = first.terms.get(e, TLaurent({}, first.tmodulus))
        b = second.terms.get(e, TLaurent({}, second.tmodulus))
        if a == b:
            continue
        texps = sorted(set(a.coeffs) | set(b.coeffs))
        for k in texps:
            ca = a.coeffs.get(k, Fraction(0))
            cb = b.coeffs.get(k, Fraction(0))
            if ca != cb:
                return False, (e, k, ca, cb)
    return True, None
