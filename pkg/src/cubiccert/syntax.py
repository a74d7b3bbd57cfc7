"""Text syntax for fields, monomials, forms and real cubics.

Grammar (whitespace is ignored between tokens)::

    field    := base ("[[" name "]]")*
    base     := "C" | "R" | "Fq(" int ")" | "Qp(" int [";" int] ")"
    monomial := ["-"] factor ("*" factor)*
    factor   := int ["/" int] | name ["^" ["-"] int]
    form     := "<" monomial ("," monomial)* ">"
    pfister  := "<<" [monomial ("," monomial)*] ">>"
    cubic    := sum of terms in "u" with +, -, *, ^, parentheses and
                implicit products such as "u(u-1)(u+1)"; degree <= 3

Inside monomials ``zeta`` is the fixed primitive element of the residue
field (finite and p-adic bases) and ``pi`` the p-adic uniformizer; any other
name must be a tower variable.  Every printer emits the canonical form and
``print(parse(s)) == s`` for canonical ``s``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CertError, ParseError
from .quadforms import DiagonalQuadraticForm, PfisterForm
from .realtopo import RationalCubic, _mul
from .tower import BaseField, Monomial, TowerField, check_element, prime_power

RESERVED = ("zeta", "pi")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str = "") -> bool:
        self.skip()
        if token:
            return self.text.startswith(token, self.pos)
        return self.pos < len(self.text)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.text[self.pos : self.pos + len(token)] or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def name(self) -> str:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
        if start == self.pos:
            raise self.error("expected a name")
        return self.text[start : self.pos]

    def at_name(self) -> bool:
        self.skip()
        return self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_")

    def at_digit(self) -> bool:
        self.skip()
        return self.pos < len(self.text) and self.text[self.pos].isdigit()

    def finish(self) -> None:
        if self.peek():
            raise self.error(f"unexpected trailing text {self.text[self.pos:]!r}")


def _run(parser, text: str):
    reader = _Reader(text)
    value = parser(reader)
    reader.finish()
    return value


# --- fields -------------------------------------------------------------------


def _base(r: _Reader) -> BaseField:
    if r.accept("Fq("):
        at = r.pos
        q = r.integer()
        if prime_power(q) is None:
            raise r.error(f"{q} is not a prime power", at)
        r.expect(")")
        return BaseField.finite(q)
    if r.accept("Qp("):
        at = r.pos
        p = r.integer()
        if prime_power(p) is None or prime_power(p)[1] != 1:
            raise r.error(f"{p} is not a prime", at)
        q = p
        if r.accept(";"):
            at = r.pos
            q = r.integer()
            pp = prime_power(q)
            if pp is None or pp[0] != p:
                raise r.error(f"{q} is not a power of {p}", at)
        r.expect(")")
        return BaseField.padic(p, q)
    if r.accept("C"):
        return BaseField.complex()
    if r.accept("R"):
        return BaseField.real()
    raise r.error("expected a base field C, R, Fq(q) or Qp(p;q)")


def _field(r: _Reader) -> TowerField:
    base = _base(r)
    names: list[str] = []
    while r.accept("[["):
        at = r.pos
        name = r.name()
        if name in RESERVED or name == "u":
            raise r.error(f"{name!r} is reserved and cannot name a tower variable", at)
        if name in names:
            raise r.error(f"repeated tower variable {name!r}", at)
        names.append(name)
        r.expect("]]")
    return TowerField(base, tuple(names))


def parse_field(text: str) -> TowerField:
    return _run(_field, text)


def format_field(F: TowerField) -> str:
    return str(F)


# --- monomials and forms --------------------------------------------------------


def _monomial(r: _Reader, F: TowerField) -> Monomial:
    start = r.pos
    coeff = Fraction(-1) if r.accept("-") else Fraction(1)
    exps = [0] * F.height
    zeta = pi = 0
    while True:
        at = r.pos
        if r.at_digit():
            num = r.integer()
            if r.accept("/"):
                den_at = r.pos
                den = r.integer()
                if den == 0:
                    raise r.error("zero denominator", den_at)
                coeff *= Fraction(num, den)
            else:
                coeff *= num
        elif r.at_name():
            name = r.name()
            power = 1
            if r.accept("^"):
                sign = -1 if r.accept("-") else 1
                power = sign * r.integer()
            if name == "zeta":
                zeta += power
            elif name == "pi":
                pi += power
            elif name in F.variables:
                exps[F.index(name)] += power
            else:
                raise r.error(f"unknown name {name!r} (not a variable of {F})", at)
        else:
            raise r.error("expected a number or a name")
        if not r.accept("*"):
            break
    if coeff == 0:
        raise r.error("zero coefficient", start)
    x = Monomial(coeff, tuple(exps), zeta, pi)
    try:
        check_element(F, x)
    except CertError as exc:
        raise r.error(str(exc), start) from None
    return x


def _monomial_list(r: _Reader, F: TowerField, close: str) -> list[Monomial]:
    items: list[Monomial] = []
    if r.peek(close):
        return items
    items.append(_monomial(r, F))
    while r.accept(","):
        items.append(_monomial(r, F))
    return items


def parse_monomial(text: str, F: TowerField) -> Monomial:
    return _run(lambda r: _monomial(r, F), text)


def parse_form(text: str, F: TowerField) -> DiagonalQuadraticForm:
    def form(r: _Reader) -> DiagonalQuadraticForm:
        if r.peek("<<"):
            raise r.error("expected '<' (a Pfister form '<<...>>' is not a diagonal form)")
        r.expect("<")
        items = _monomial_list(r, F, ">")
        if not items:
            raise r.error("a form needs at least one coefficient")
        r.expect(">")
        return DiagonalQuadraticForm(F, tuple(items))

    return _run(form, text)


def parse_pfister(text: str, F: TowerField) -> PfisterForm:
    def pfister(r: _Reader) -> PfisterForm:
        r.expect("<<")
        items = _monomial_list(r, F, ">>")
        r.expect(">>")
        return PfisterForm(F, tuple(items))

    return _run(pfister, text)


def _format_power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def format_monomial(x: Monomial, F: TowerField) -> str:
    factors = []
    if x.zeta:
        factors.append(_format_power("zeta", x.zeta))
    if x.pi:
        factors.append(_format_power("pi", x.pi))
    factors += [_format_power(v, e) for v, e in zip(F.variables, x.exps) if e]
    c = x.coeff
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


def format_form(q: DiagonalQuadraticForm) -> str:
    return "<" + ",".join(format_monomial(c, q.field) for c in q.coeffs) + ">"


def format_pfister(phi: PfisterForm) -> str:
    return "<<" + ",".join(format_monomial(a, phi.field) for a in phi.slots) + ">>"


# --- real cubics ------------------------------------------------------------------


def _poly_add(a, b, sign=1):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return tuple(x + sign * y for x, y in zip(a, b))


def _poly_pow(a, k):
    out: tuple[Fraction, ...] = (Fraction(1),)
    for _ in range(k):
        out = _mul(out, a)
    return out


def _poly_expr(r: _Reader):
    negative = r.accept("-")
    if not negative:
        r.accept("+")
    acc = _poly_term(r)
    if negative:
        acc = tuple(-c for c in acc)
    while True:
        if r.accept("+"):
            acc = _poly_add(acc, _poly_term(r))
        elif r.accept("-"):
            acc = _poly_add(acc, _poly_term(r), -1)
        else:
            return acc


def _poly_term(r: _Reader):
    acc = _poly_power(r)
    while True:
        if r.accept("*"):
            acc = _mul(acc, _poly_power(r))
        elif r.peek("(") or r.peek("u"):
            acc = _mul(acc, _poly_power(r))
        else:
            return acc


def _poly_power(r: _Reader):
    base = _poly_atom(r)
    if r.accept("^"):
        at = r.pos
        k = r.integer()
        if k > 3:
            raise r.error(f"exponent {k} exceeds the cubic degree bound", at)
        base = _poly_pow(base, k)
    return base


def _poly_atom(r: _Reader):
    if r.accept("("):
        inner = _poly_expr(r)
        r.expect(")")
        return inner
    if r.at_digit():
        num = r.integer()
        if r.accept("/"):
            at = r.pos
            den = r.integer()
            if den == 0:
                raise r.error("zero denominator", at)
            return (Fraction(num, den),)
        return (Fraction(num),)
    if r.at_name():
        at = r.pos
        name = r.name()
        if name != "u":
            raise r.error(f"unknown variable {name!r}; polynomials are in u", at)
        return (Fraction(0), Fraction(1))
    raise r.error("expected a number, 'u' or '('")


def parse_cubic(text: str) -> RationalCubic:
    def cubic(r: _Reader) -> RationalCubic:
        coeffs = _poly_expr(r)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) > 4:
            raise r.error(f"degree {len(coeffs) - 1} exceeds 3", 0)
        return RationalCubic(coeffs)

    return _run(cubic, text)


def format_cubic(f: RationalCubic) -> str:
    return str(f)

