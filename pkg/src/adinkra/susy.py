"""Supercharge transformation rules read off an Adinkra, and a symbolic check of their algebra.

Each rule has the form ``Q_k(x) = c (d/dt)^p y`` with ``c`` a Gaussian integer.
For a color-``k`` edge between boson ``b`` and fermion ``f`` with sign ``s``:

* ``b`` below ``f``:  ``Q_k(f) = s i d/dt b``   and ``Q_k(b) = s f``
* ``f`` below ``b``:  ``Q_k(f) = s i b``        and ``Q_k(b) = s d/dt f``

so that ``Q_k Q_k = i d/dt`` on every field.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .dashing import validate_totally_odd
from .graph import BOSON, ColoredGraph, GraphError, default_parity
from .heights import check_heights


@dataclass(frozen=True)
class Gaussian:
    re: int
    im: int = 0

    def __mul__(self, other: Gaussian) -> Gaussian:
        return Gaussian(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def __add__(self, other: Gaussian) -> Gaussian:
        return Gaussian(self.re + other.re, self.im + other.im)

    def __neg__(self) -> Gaussian:
        return Gaussian(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        return f"({self.re}{self.im:+d}i)"


ONE = Gaussian(1)
I = Gaussian(0, 1)


@dataclass(frozen=True, order=True)
class Field:
    kind: str  # "b" or "f"
    vertex: int

    def __str__(self) -> str:
        return f"{self.kind}{self.vertex}"


@dataclass(frozen=True)
class FieldTerm:
    coefficient: Gaussian
    order: int
    field: Field

    def then(self, rule: FieldTerm) -> FieldTerm:
        """Apply a linear operator whose value on ``self.field`` is ``rule``."""
        return FieldTerm(self.coefficient * rule.coefficient, self.order + rule.order, rule.field)


@dataclass(frozen=True)
class SupermultipletRules:
    colors: int
    rules: dict[tuple[int, Field], FieldTerm]

    def __call__(self, k: int, field: Field) -> FieldTerm:
        return self.rules[k, field]

    def fields(self) -> list[Field]:
        return sorted({f for _, f in self.rules})

    def apply(self, k: int, term: FieldTerm) -> FieldTerm:
        return term.then(self.rules[k, term.field])


def emit_rules(g: ColoredGraph, strict: bool = True) -> SupermultipletRules:
    """Rules for every color; ``strict=False`` skips the totally-odd check (for probing bad dashings)."""
    parity = default_parity(g)
    if parity is None:
        raise GraphError("graph has no boson/fermion parity")
    if g.height is None:
        raise GraphError("graph has no heights")
    problems = check_heights(g, g.height)
    if problems:
        raise GraphError(problems[0])
    if strict and validate_totally_odd(g):
        raise GraphError("dashing is not totally odd")
    h = g.height
    rules: dict[tuple[int, Field], FieldTerm] = {}
    for e in g.edges:
        b, f = (e.u, e.v) if parity[e.u - 1] == BOSON else (e.v, e.u)
        if parity[b - 1] != BOSON or parity[f - 1] == BOSON:
            raise GraphError(f"edge {e.u}-{e.v} does not join a boson to a fermion")
        s = Gaussian(e.sign)
        fb, ff = Field("b", b), Field("f", f)
        if h[b - 1] < h[f - 1]:
            rules[e.color, ff] = FieldTerm(s * I, 1, fb)
            rules[e.color, fb] = FieldTerm(s, 0, ff)
        else:
            rules[e.color, ff] = FieldTerm(s * I, 0, fb)
            rules[e.color, fb] = FieldTerm(s, 1, ff)
    return SupermultipletRules(g.colors, rules)


@dataclass(frozen=True)
class Failure:
    i: int
    j: int
    field: Field
    detail: str

    def __str__(self) -> str:
        what = f"Q{self.i}^2" if self.i == self.j else f"{{Q{self.i},Q{self.j}}}"
        return f"{what} on {self.field}: {self.detail}"


@dataclass(frozen=True)
class AlgebraReport:
    failures: tuple[Failure, ...]
    checks: int

    @property
    def passed(self) -> bool:
        return not self.failures

    def format(self) -> str:
        head = f"{self.checks} checks, {len(self.failures)} failures"
        return "\n".join([head] + [str(f) for f in self.failures]) + "\n"


def _show(terms: dict[tuple[int, Field], Gaussian]) -> str:
    parts = [f"{c}*d{p}({x})" for (p, x), c in sorted(terms.items(), key=lambda kv: (kv[0][0], kv[0][1])) if c]
    return " + ".join(parts) or "0"


def verify_algebra(rules: SupermultipletRules) -> AlgebraReport:
    """Check ``Q_k Q_k = i d/dt`` and ``Q_i Q_j + Q_j Q_i = 0`` (``i != j``) on every field."""
    failures = []
    checks = 0
    for x in rules.fields():
        start = FieldTerm(ONE, 0, x)
        for k in range(1, rules.colors + 1):
            checks += 1
            got = rules.apply(k, rules.apply(k, start))
            if (got.coefficient, got.order, got.field) != (I, 1, x):
                failures.append(Failure(k, k, x, f"got {got.coefficient} d^{got.order} {got.field}"))
        for i, j in combinations(range(1, rules.colors + 1), 2):
            checks += 1
            total: dict[tuple[int, Field], Gaussian] = defaultdict(lambda: Gaussian(0))
            for a, b in ((i, j), (j, i)):
                t = rules.apply(a, rules.apply(b, start))
                total[t.order, t.field] = total[t.order, t.field] + t.coefficient
            if any(total.values()):
                failures.append(Failure(i, j, x, "anticommutator is " + _show(total)))
    return AlgebraReport(tuple(failures), checks)


def _text_term(t: FieldTerm) -> str:
    c = t.coefficient
    if c in (ONE, -ONE):
        sign, coeff = ("+" if c == ONE else "-"), "1"
    elif c in (I, -I):
        sign, coeff = ("+" if c == I else "-"), "i"
    else:
        sign, coeff = "", f"({c})"
    deriv = "" if t.order == 0 else (" d/dt" if t.order == 1 else f" d/dt^{t.order}")
    return f"{sign}{coeff}{deriv} {t.field}"


def _sub(base: str, index: int) -> str:
    return f"{base}_{index}" if index < 10 else f"{base}_{{{index}}}"


def _latex_term(t: FieldTerm) -> str:
    c = t.coefficient
    prefix = {ONE: "", -ONE: "-", I: "i", -I: "-i"}.get(c, f"({c})")
    deriv = "" if t.order == 0 else (r"\frac{d}{dt}" if t.order == 1 else rf"\frac{{d^{t.order}}}{{dt^{t.order}}}")
    field = _sub(t.field.kind, t.field.vertex)
    body = " ".join(p for p in (deriv, field) if p)
    if prefix in ("", "-"):
        return prefix + body
    return f"{prefix} {body}"


def _ordered(rules: SupermultipletRules, colors) -> list[tuple[int, Field]]:
    keys = [key for key in rules.rules if key[0] in colors]
    return sorted(keys, key=lambda kf: (kf[0], kf[1].kind != "f", kf[1].vertex))


def render(rules: SupermultipletRules, fmt: str = "text", colors=None) -> str:
    if colors is None:
        colors = range(1, rules.colors + 1)
    colors = set(colors)
    keys = _ordered(rules, colors)
    if fmt == "text":
        lines = [f"Q{k}({x}) = {_text_term(rules.rules[k, x])}" for k, x in keys]
        return "".join(ln + "\n" for ln in lines)
    if fmt == "latex":
        if not keys:
            return ""
        lines = [
            rf"{_sub('Q', k)}({_sub(x.kind, x.vertex)}) &= {_latex_term(rules.rules[k, x])} \\"
            for k, x in keys
        ]
        return "\\begin{align*}\n" + "\n".join(lines) + "\n\\end{align*}\n"
    raise ValueError(f"unknown format {fmt!r}")
