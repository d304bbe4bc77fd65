"""Sparse multivariate polynomials over the Gaussian rationals.

Terms are keyed by exponent tuples on an explicit, named variable space,
so phase-space polynomials in (p_1..p_n, q_1..q_n) and representation
polynomials in (z_1..z_n) cannot be mixed by accident.  Canonical
iteration order is graded lexicographic (total degree first, then the
exponent tuple), which keeps every printed form and every assembled
matrix reproducible.
"""

from __future__ import annotations

import re as _regex
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .scalars import GaussianRational, ONE, ZERO, as_gaussian


@dataclass(frozen=True)
class VariableSpace:
    """Ordered tuple of distinct variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("variable space needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} in space {self}") from None

    def __str__(self) -> str:
        return "(" + ",".join(self.names) + ")"


@lru_cache(maxsize=None)
def phase_space(n: int) -> VariableSpace:
    """The 2n-variable space (p_1..p_n, q_1..q_n)."""
    if n < 1:
        raise ValueError("phase space needs n >= 1")
    return VariableSpace(tuple(f"p{k}" for k in range(1, n + 1)) + tuple(f"q{k}" for k in range(1, n + 1)))


@lru_cache(maxsize=None)
def p_space(n: int) -> VariableSpace:
    """The n-variable space (p_1..p_n) that differential operators act on."""
    if n < 1:
        raise ValueError("need n >= 1")
    return VariableSpace(tuple(f"p{k}" for k in range(1, n + 1)))


@lru_cache(maxsize=None)
def z_space(n: int) -> VariableSpace:
    """The n-variable representation space (z_1..z_n); p_k <-> z_k positionally."""
    if n < 1:
        raise ValueError("need n >= 1")
    return VariableSpace(tuple(f"z{k}" for k in range(1, n + 1)))


# -- multi-index helpers ---------------------------------------------------

def midx_degree(exps: tuple[int, ...]) -> int:
    return sum(exps)


def midx_factorial(exps: tuple[int, ...]) -> int:
    out = 1
    for e in exps:
        out *= factorial(e)
    return out


def midx_binomial(upper: tuple[int, ...], lower: tuple[int, ...]) -> int:
    out = 1
    for u, l in zip(upper, lower):
        out *= comb(u, l)
    return out


def grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


def compositions(total: int, parts: int):
    """Yield all tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


@lru_cache(maxsize=None)
def monomials_of_degree(arity: int, degree: int) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(compositions(degree, arity)))


@lru_cache(maxsize=None)
def monomials_upto(arity: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of total degree <= degree, in graded-lex order."""
    out = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(arity, d))
    return tuple(out)


def dim_upto(arity: int, degree: int) -> int:
    return comb(arity + degree, arity)


# -- polynomials -----------------------------------------------------------

class Polynomial:
    """Sparse polynomial: map from exponent tuples to nonzero scalars."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VariableSpace, terms=None):
        clean: dict[tuple[int, ...], GaussianRational] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != space.arity:
                raise ValueError(f"exponent tuple {exps} does not fit space {space}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = as_gaussian(coeff)
            if coeff:
                acc = clean.get(exps)
                if acc is None:
                    clean[exps] = coeff
                else:
                    acc = acc + coeff
                    if acc:
                        clean[exps] = acc
                    else:
                        del clean[exps]
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _make(cls, space, terms) -> "Polynomial":
        # trusted constructor: `terms` already canonical (no zeros, right arity)
        self = object.__new__(cls)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, space: VariableSpace) -> "Polynomial":
        return cls._make(space, {})

    @classmethod
    def constant(cls, space: VariableSpace, value) -> "Polynomial":
        value = as_gaussian(value)
        if not value:
            return cls.zero(space)
        return cls._make(space, {(0,) * space.arity: value})

    @classmethod
    def variable(cls, space: VariableSpace, name: str) -> "Polynomial":
        idx = space.index(name)
        exps = tuple(1 if k == idx else 0 for k in range(space.arity))
        return cls._make(space, {exps: ONE})

    @classmethod
    def monomial(cls, space: VariableSpace, exps, coeff=ONE) -> "Polynomial":
        return cls(space, {tuple(exps): coeff})

    # -- basic queries ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, indices) -> int:
        """Total degree counting only the given variable positions."""
        if not self.terms:
            return -1
        return max(sum(e[i] for i in indices) for e in self.terms)

    def coefficient(self, exps) -> GaussianRational:
        return self.terms.get(tuple(exps), ZERO)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.space.arity, ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    # -- arithmetic -------------------------------------------------------

    def _require_same_space(self, other: "Polynomial"):
        if self.space != other.space:
            raise ValueError(f"variable space mismatch: {self.space} vs {other.space}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial.constant(self.space, other)
        self._require_same_space(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            if acc is None:
                out[exps] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[exps] = acc
                else:
                    del out[exps]
        return Polynomial._make(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return self - Polynomial.constant(self.space, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._require_same_space(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = out.get(key)
                if acc is None:
                    out[key] = c
                else:
                    acc = acc + c
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
        return Polynomial._make(self.space, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value) -> "Polynomial":
        value = as_gaussian(value)
        if not value:
            return Polynomial.zero(self.space)
        return Polynomial._make(self.space, {e: c * value for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.space, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if self.terms and set(self.terms) != {(0,) * self.space.arity}:
                return NotImplemented
            return self.constant_term() == other
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def partial(self, name: str) -> "Polynomial":
        """Exact formal partial derivative with respect to one variable."""
        idx = self.space.index(name)
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e:
                key = exps[:idx] + (e - 1,) + exps[idx + 1 :]
                c = coeff * e
                acc = out.get(key)
                out[key] = c if acc is None else acc + c
        return Polynomial._make(self.space, {e: c for e, c in out.items() if c})

    def derivative(self, orders) -> "Polynomial":
        """Iterated partial derivative by a multi-index of orders."""
        orders = tuple(orders)
        if len(orders) != self.space.arity:
            raise ValueError("order tuple does not fit the space")
        out = {}
        for exps, coeff in self.terms.items():
            if any(e < o for e, o in zip(exps, orders)):
                continue
            fall = 1
            for e, o in zip(exps, orders):
                for j in range(o):
                    fall *= e - j
            key = tuple(e - o for e, o in zip(exps, orders))
            c = coeff * fall
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return Polynomial._make(self.space, {e: c for e, c in out.items() if c})

    def homogeneous_components(self):
        """List of (degree, homogeneous part) pairs, ascending, empty degrees omitted."""
        buckets: dict[int, dict] = {}
        for exps, coeff in self.terms.items():
            buckets.setdefault(sum(exps), {})[exps] = coeff
        return [
            (d, Polynomial._make(self.space, terms))
            for d, terms in sorted(buckets.items())
        ]

    # -- transport ----------------------------------------------------------

    def relabel(self, space: VariableSpace) -> "Polynomial":
        """Positional renaming of variables onto a space of the same arity."""
        if space.arity != self.space.arity:
            raise ValueError("relabel requires equal arity")
        return Polynomial._make(space, dict(self.terms))

    def substitute(self, mapping: dict, space: VariableSpace) -> "Polynomial":
        """Composition: replace every variable by a polynomial on `space`."""
        images = {}
        for name, image in mapping.items():
            self.space.index(name)
            if image.space != space:
                raise ValueError("substitution image lives on the wrong space")
            images[name] = image
        power_cache: dict[tuple[str, int], Polynomial] = {}

        def power(name, k):
            cached = power_cache.get((name, k))
            if cached is None:
                cached = images[name] ** k
                power_cache[(name, k)] = cached
            return cached

        acc = Polynomial.zero(space)
        for exps, coeff in self.terms.items():
            part = Polynomial.constant(space, coeff)
            for name, e in zip(self.space.names, exps):
                if e:
                    if name not in images:
                        raise ValueError(f"no substitution image for variable {name!r}")
                    part = part * power(name, e)
            acc = acc + part
        return acc

    def evaluate(self, point: dict) -> GaussianRational:
        """Evaluate at a point given as {variable name: scalar}."""
        values = [as_gaussian(point[name]) if name in point else None for name in self.space.names]
        total = ZERO
        for exps, coeff in self.terms.items():
            term = coeff
            for val, e in zip(values, exps):
                if e:
                    if val is None:
                        raise ValueError("evaluation point misses a used variable")
                    term = term * val**e
            total = total + term
        return total

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        rendered = [_term_str(self.space, exps, coeff) for exps, coeff in self.sorted_terms()]
        out = rendered[0]
        for piece in rendered[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    @classmethod
    def parse(cls, space: VariableSpace, text: str) -> "Polynomial":
        s = text.strip()
        if s in ("0", ""):
            return cls.zero(space)
        pieces = _regex.split(r"\s([+-])\s", s)
        terms: dict = {}
        sign = ONE
        for piece in pieces:
            if piece == "+":
                sign = ONE
                continue
            if piece == "-":
                sign = -ONE
                continue
            exps, coeff = _parse_term(space, piece)
            coeff = coeff * sign
            acc = terms.get(exps)
            terms[exps] = coeff if acc is None else acc + coeff
        return cls(space, terms)


def _term_str(space, exps, coeff) -> str:
    factors = []
    for name, e in zip(space.names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(coeff)
    if coeff == ONE:
        return "*".join(factors)
    if coeff == -ONE:
        return "-" + "*".join(factors)
    if coeff.a != 0 and coeff.b != 0:
        return f"({coeff})*" + "*".join(factors)
    return f"{coeff}*" + "*".join(factors)


_VAR_RE = _regex.compile(r"^([A-Za-z]\w*?)(?:\^(\d+))?$")


def _parse_term(space, text):
    factors = []
    depth = 0
    start = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            factors.append(text[start:k])
            start = k + 1
    factors.append(text[start:])
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in term {text!r}")

    coeff = ONE
    exps = [0] * space.arity
    idx = 0
    while idx < len(factors):
        factor = factors[idx].strip()
        if not factor:
            raise ValueError(f"empty factor in term {text!r}")
        if factor.startswith("(") and factor.endswith(")"):
            coeff = coeff * GaussianRational.parse(factor[1:-1])
            idx += 1
            continue
        match = _VAR_RE.match(factor)
        if match and match.group(1) in space.names:
            exps[space.index(match.group(1))] += int(match.group(2) or 1)
            idx += 1
            continue
        # scalar factor, possibly "3/4*i" split across two pieces by '*'
        if factor in ("i", "-i", "+i"):
            coeff = coeff * GaussianRational.parse(factor)
        elif idx + 1 < len(factors) and factors[idx + 1].strip() == "i":
            coeff = coeff * GaussianRational.parse(factor + "*i")
            idx += 1
        else:
            coeff = coeff * GaussianRational.parse(factor)
        idx += 1
    return tuple(exps), coeff


# -- gradients and potentials ------------------------------------------------

def gradient(f: Polynomial) -> list[Polynomial]:
    return [f.partial(name) for name in f.space.names]


def potential(components: list[Polynomial]) -> Polynomial:
    """Antiderivative of a closed family: F with dF/dx_i = components[i].

    Closedness d(components[i])/dx_j = d(components[j])/dx_i is checked
    first.  The result is assembled degree by degree from the Euler
    contraction sum_i x_i * components[i] and has zero constant term.
    """
    if not components:
        raise ValueError("potential of an empty family")
    space = components[0].space
    if len(components) != space.arity:
        raise ValueError(f"need exactly {space.arity} components for space {space}")
    for f in components:
        if f.space != space:
            raise ValueError("potential components live on different spaces")
    names = space.names
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if components[i].partial(names[j]) != components[j].partial(names[i]):
                raise ValueError(
                    f"closedness fails for pair ({i + 1},{j + 1}): "
                    f"d(F{i + 1})/d{names[j]} != d(F{j + 1})/d{names[i]}"
                )
    euler = Polynomial.zero(space)
    for name, f in zip(names, components):
        euler = euler + Polynomial.variable(space, name) * f
    result = Polynomial.zero(space)
    for d, part in euler.homogeneous_components():
        # every monomial of x_i * F_i has degree >= 1, so d >= 1 here
        result = result + part.scale(GaussianRational(1) / d)
    return result
