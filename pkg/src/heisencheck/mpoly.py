"""Sparse multivariate polynomials over Q, Q(xi_n), or mixed scalars.

Terms map dense exponent tuples to nonzero coefficients.  The monomial
order is graded reverse lexicographic throughout, which fixes leading
terms, division, and the canonical text rendering.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .exactnum import CycloNum


def grevlex_key(exps: tuple[int, ...]):
    """Sort key; larger key = larger monomial in grevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _normalize_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class SparsePoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None) -> None:
        tdict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exps, coeff in items:
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent vector {exps} has arity {len(exps)}, expected {nvars}"
                    )
                coeff = _normalize_coeff(coeff)
                if exps in tdict:
                    coeff = tdict[exps] + coeff
                if coeff:
                    tdict[exps] = coeff
                elif exps in tdict:
                    del tdict[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", tdict)

    def __setattr__(self, *args):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "SparsePoly":
        exps = [0] * nvars
        exps[i] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, indices: Iterable[int], coeff=1) -> "SparsePoly":
        """Product of variables given by indices (repeats allowed)."""
        exps = [0] * nvars
        for i in indices:
            exps[i] += 1
        return cls(nvars, {tuple(exps): coeff})

    # -- structure --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in decreasing grevlex order."""
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grevlex_key)
        return exps, self.terms[exps]

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), Fraction(0))

    def is_term(self) -> bool:
        return len(self.terms) == 1

    def is_monomial(self) -> bool:
        """Single term with coefficient 1."""
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def monic(self) -> "SparsePoly":
        if not self.terms:
            return self
        _, lc = self.leading_term()
        return self.scale(Fraction(1) / lc if isinstance(lc, Fraction) else lc.inverse())

    # -- arithmetic -------------------------------------------------------

    def _check_arity(self, other: "SparsePoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_arity(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            elif exps in out:
                del out[exps]
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_arity(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exps, 0) + c1 * c2
                if s:
                    out[exps] = s
                elif exps in out:
                    del out[exps]
        return SparsePoly(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "SparsePoly":
        c = _normalize_coeff(c)
        if not c:
            return SparsePoly.zero(self.nvars)
        return SparsePoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycloNum)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; use rendered form as a key if needed

    # -- substitution and evaluation ---------------------------------------

    def substitute(
        self,
        mapping: Mapping[int, "SparsePoly"],
        nvars_out: int | None = None,
    ) -> "SparsePoly":
        """Simultaneous substitution x_i -> mapping[i].

        Unmapped variables are carried through unchanged, which requires
        the target ring to be the same one; when nvars_out differs, every
        variable occurring in self must be mapped.
        """
        target = self.nvars if nvars_out is None else nvars_out
        images: dict[int, SparsePoly] = {}
        for i, g in mapping.items():
            if g.nvars != target:
                raise ValueError(f"image of x_{i} lives in arity {g.nvars}, expected {target}")
            images[i] = g
        result = SparsePoly.zero(target)
        power_cache: dict[tuple[int, int], SparsePoly] = {}

        def var_power(i: int, e: int) -> SparsePoly:
            key = (i, e)
            if key not in power_cache:
                if i in images:
                    power_cache[key] = images[i] ** e
                elif target == self.nvars:
                    power_cache[key] = SparsePoly.variable(target, i, e)
                else:
                    raise ValueError(f"variable x_{i} unmapped across ring change")
            return power_cache[key]

        for exps, coeff in self.terms.items():
            term = SparsePoly.constant(target, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * var_power(i, e)
            result = result + term
        return result

    def permute_variables(self, perm) -> "SparsePoly":
        """Relabel x_i -> x_perm[i]; perm must be a bijection on indices."""
        out = {}
        for exps, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i]] = e
            out[tuple(new)] = c
        return SparsePoly(self.nvars, out)

    def evaluate(self, point) -> object:
        """Exact value at a point of field elements (Fraction or CycloNum)."""
        point = list(point)
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = 0
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, exps):
                if e:
                    v = v * (x ** e)
            total = v + total
        if isinstance(total, int):
            return Fraction(total)
        return total

    def evaluate_mod(self, point, q: int, xi_image: int | None = None) -> int:
        """Value in F_q; cyclotomic coefficients reduce through xi -> xi_image."""
        from .exactnum import cyclo_mod, fraction_mod

        total = 0
        for exps, coeff in self.terms.items():
            if isinstance(coeff, CycloNum):
                if xi_image is None:
                    raise ValueError("cyclotomic coefficient needs a designated root image")
                c = cyclo_mod(coeff, q, xi_image)
            else:
                c = fraction_mod(coeff, q)
            for x, e in zip(point, exps):
                if e:
                    c = c * pow(int(x) % q, e, q) % q
            total = (total + c) % q
        return total

    def map_coefficients(self, fn) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def derivative(self, i: int) -> "SparsePoly":
        out = {}
        for exps, c in self.terms.items():
            if exps[i]:
                new = list(exps)
                new[i] -= 1
                out[tuple(new)] = c * exps[i]
        return SparsePoly(self.nvars, out)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {render_poly(self)})"


# -- division ---------------------------------------------------------------


def _exps_divides(d: tuple[int, ...], e: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(d, e))


def divmod_single(f: SparsePoly, d: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    """Division with remainder by a single divisor under grevlex."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f._check_arity(d)
    d_exps, d_coeff = d.leading_term()
    quotient = SparsePoly.zero(f.nvars)
    remainder_terms: dict = {}
    work = f
    while work.terms:
        exps, coeff = work.leading_term()
        if _exps_divides(d_exps, exps):
            q_exps = tuple(a - b for a, b in zip(exps, d_exps))
            q_coeff = coeff / d_coeff
            t = SparsePoly(f.nvars, {q_exps: q_coeff})
            quotient = quotient + t
            work = work - t * d
        else:
            remainder_terms[exps] = coeff
            work = SparsePoly(f.nvars, {e: c for e, c in work.terms.items() if e != exps})
    return quotient, SparsePoly(f.nvars, remainder_terms)


def divide_exact(f: SparsePoly, d: SparsePoly) -> SparsePoly | None:
    """Exact quotient f/d, or None when f is not a multiple of d."""
    q, r = divmod_single(f, d)
    return q if r.is_zero() else None


def graded_monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, grevlex descending."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    out.sort(key=grevlex_key, reverse=True)
    assert len(out) == math.comb(degree + nvars - 1, nvars - 1)
    return out


class Ideal:
    """Homogeneous ideal presented by generators."""

    __slots__ = ("nvars", "generators")

    def __init__(self, nvars: int, generators: Iterable[SparsePoly]) -> None:
        gens = list(generators)
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generator arity mismatch")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator {g}")
        self.nvars = nvars
        self.generators = gens

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# -- canonical text form ------------------------------------------------------


def default_variables(nvars: int, start: int = 0) -> list[str]:
    return [f"x{i}" for i in range(start, start + nvars)]


def render_poly(f: SparsePoly, variables: list[str] | None = None) -> str:
    if variables is None:
        variables = default_variables(f.nvars)
    if len(variables) != f.nvars:
        raise ValueError("variable name list has wrong length")
    if not f.terms:
        return "0"
    pieces = []
    for exps, coeff in f.sorted_terms():
        factors = []
        for name, e in zip(variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if isinstance(coeff, CycloNum):
            if coeff.is_rational():
                coeff = coeff.as_rational()
        if isinstance(coeff, CycloNum):
            coeff_str, sign = f"({coeff!r})", "+"
        else:
            sign = "-" if coeff < 0 else "+"
            mag = -coeff if coeff < 0 else coeff
            coeff_str = "" if (mag == 1 and factors) else str(mag)
        body = "*".join(([coeff_str] if coeff_str else []) + factors)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|/|\+|-)")


def parse_poly(text: str, variables: list[str], nvars: int | None = None) -> SparsePoly:
    """Parse the canonical grammar: rational coefficients, ``*`` products, ``^`` powers."""
    if nvars is None:
        nvars = len(variables)
    index = {name: i for i, name in enumerate(variables)}
    tokens: list[str | None] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)  # sentinel

    k = 0

    def peek():
        return tokens[k]

    def take():
        nonlocal k
        t = tokens[k]
        k += 1
        return t

    def take_int() -> int:
        t = take()
        if t is None or not t.isdigit():
            raise ValueError(f"expected integer, got {t!r}")
        return int(t)

    def parse_factor() -> SparsePoly:
        t = take()
        if t is None:
            raise ValueError("unexpected end of polynomial")
        if t.isdigit():
            value = Fraction(int(t))
            if peek() == "/":
                take()
                value /= take_int()
            return SparsePoly.constant(nvars, value)
        if t in index:
            power = 1
            if peek() == "^":
                take()
                power = take_int()
            return SparsePoly.variable(nvars, index[t], power)
        raise ValueError(f"unknown symbol {t!r}")

    def parse_term() -> SparsePoly:
        result = parse_factor()
        while peek() == "*":
            take()
            result = result * parse_factor()
        return result

    total = SparsePoly.zero(nvars)
    sign = 1
    if peek() == "-":
        take()
        sign = -1
    elif peek() == "+":
        take()
    while True:
        total = total + parse_term().scale(sign)
        t = peek()
        if t is None:
            return total
        if t == "+":
            sign = 1
        elif t == "-":
            sign = -1
        else:
            raise ValueError(f"unexpected token {t!r}")
        take()
