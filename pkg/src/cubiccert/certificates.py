"""Obstruction certificates for cubic hypersurfaces, their verifier, and survey tables.

A certificate records a witness equation, the builder inputs it was made
from, named mechanical checks with their results, and cited axioms with the
syntactic data each one is applied to.  The verifier never trusts stored
results: it rebuilds the certificate from the witness inputs, compares every
field, and re-matches each axiom's hypothesis record against its pattern.

Methods and their fixed inference templates:

============== ============================ ===========================
method         checks                       conclusion
============== ============================ ===========================
diagonal       non-cube, symbol, residues   NotUniversallyCH0Trivial
diagonal-padic non-cube, symbol, residues   NotUniversallyCH0Trivial
fibered        Pfister anisotropy, values   NotRetractRational
quadric-pair   anisotropy of q              NotUniversallyCH0Trivial
real           component count              NotUniversallyCH0Trivial
============== ============================ ===========================
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from .errors import CertError, HypothesisError, PreconditionError, UnsupportedError
from .quadforms import (
    DiagonalQuadraticForm,
    PfisterForm,
    canonical_pfister_slots,
    expand_pfister,
    is_anisotropic,
    is_pfister_subform_syntactic,
    pfister_represents,
    u_invariant,
)
from .realtopo import RationalCubic, component_report
from .symbols import field_symbol, nonvanishing_witness, residue
from .syntax import (
    format_form,
    format_monomial,
    format_pfister,
    parse_field,
    parse_form,
    parse_monomial,
    parse_pfister,
)
from .tower import COMPLEX, PADIC, Monomial, TowerField, class_of, laurent_tower, pi_valuation

VERSION = 1
TOKEN = "(x+jy)/(x+y)"

NOT_CH0_TRIVIAL = "NotUniversallyCH0Trivial"
NOT_RETRACT_RATIONAL = "NotRetractRational"

DIAGONAL = "diagonal"
DIAGONAL_PADIC = "diagonal-padic"
FIBERED = "fibered"
QUADRIC_PAIR = "quadric-pair"
REAL = "real"
METHODS = (DIAGONAL, DIAGONAL_PADIC, FIBERED, QUADRIC_PAIR, REAL)

# axiom names
MANIN = "manin-base-case"
MILNOR = "milnor-relation-vanishing"
LAURENT_SPECIALIZATION = "laurent-extension-specialization"
HOFFMANN = "hoffmann-no-rational-map"
SPRINGER_INDEX = "springer-index"
CHOW_SPECIALIZATION = "chow-specialization"
SMOOTHING = "generic-smoothness"
DPHI = "pfister-dphi-pairing"
R_SPECIALIZATION = "requivalence-specialization"
EHRESMANN = "ehresmann-stability"
REAL_CH0 = "real-components-ch0"

TEMPLATES: dict[str, tuple[tuple[str, ...], tuple[str, ...], str]] = {
    DIAGONAL: (("a_not_cube", "symbol_nonzero", "residue_chain"), (MANIN, MILNOR), NOT_CH0_TRIVIAL),
    DIAGONAL_PADIC: (("a_not_cube", "symbol_nonzero", "residue_chain"), (MANIN, MILNOR), NOT_CH0_TRIVIAL),
    FIBERED: (
        ("phi_anisotropic", "rho_not_represented", "phi_rho_anisotropic", "q_subform", "q_anisotropic", "evaluation"),
        (DPHI, R_SPECIALIZATION, SMOOTHING),
        NOT_RETRACT_RATIONAL,
    ),
    QUADRIC_PAIR: (("q_anisotropic",), (HOFFMANN, SPRINGER_INDEX, CHOW_SPECIALIZATION, SMOOTHING), NOT_CH0_TRIVIAL),
    REAL: (("components",), (EHRESMANN, REAL_CH0, SMOOTHING), NOT_CH0_TRIVIAL),
}


@dataclass(frozen=True)
class Axiom:
    """A cited result together with the data it is applied to."""

    name: str
    hypothesis: Mapping[str, Any]

    def to_dict(self) -> dict:
        return {"name": self.name, "hypothesis": dict(self.hypothesis)}


@dataclass(frozen=True)
class Check:
    """A named mechanical check; ``data`` always carries a ``result`` entry."""

    name: str
    data: Mapping[str, Any]

    @property
    def result(self) -> Any:
        return self.data["result"]

    def to_dict(self) -> dict:
        return {"name": self.name, **self.data}


@dataclass(frozen=True)
class ObstructionCertificate:
    method: str
    field: str
    N: int
    equation: str
    witness: Mapping[str, Any]
    checks: tuple[Check, ...]
    axioms: tuple[Axiom, ...]
    conclusion: str
    version: int = VERSION

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "method": self.method,
            "field": self.field,
            "N": self.N,
            "equation": self.equation,
            "witness": dict(self.witness),
            "checks": [c.to_dict() for c in self.checks],
            "axioms": [a.to_dict() for a in self.axioms],
            "conclusion": self.conclusion,
        }

    def dumps(self) -> str:
        """Canonical JSON: sorted keys, two-space indent, trailing newline."""
        return dumps(self.to_dict())


def dumps(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def from_dict(doc: Mapping[str, Any]) -> ObstructionCertificate:
    """Inverse of :meth:`ObstructionCertificate.to_dict`; raises KeyError/TypeError on bad shape."""
    checks = []
    for c in doc["checks"]:
        data = {k: v for k, v in c.items() if k != "name"}
        if "result" not in data:
            raise KeyError(f"check {c.get('name')!r} has no result")
        checks.append(Check(c["name"], data))
    axioms = tuple(Axiom(a["name"], dict(a["hypothesis"])) for a in doc["axioms"])
    return ObstructionCertificate(
        method=doc["method"],
        field=doc["field"],
        N=doc["N"],
        equation=doc["equation"],
        witness=dict(doc["witness"]),
        checks=tuple(checks),
        axioms=axioms,
        conclusion=doc["conclusion"],
        version=doc["version"],
    )


# --- rendering helpers -----------------------------------------------------------


def _term(coeff: str, var: str) -> str:
    if coeff == "1":
        return var
    if coeff == "-1":
        return f"-{var}"
    return f"{coeff}*{var}"


def _sum(terms: list[str]) -> str:
    return " + ".join(terms).replace("+ -", "- ")


def _quadratic_sum(q: DiagonalQuadraticForm, var: str = "x", start: int = 1) -> str:
    return _sum([_term(format_monomial(c, q.field), f"{var}{i}^2") for i, c in enumerate(q.coeffs, start)])


def milnor_relation(coefficients: list[str], variables: list[str]) -> str:
    """The relation ``1 + a*(w/z)^3 + sum c_i*(t_i/z)^3 = 0`` on the divisor ``x + y = 0``."""
    terms = ["1"] + [_term(c, f"({v}/z)^3") for c, v in zip(coefficients, variables)]
    return _sum(terms) + " = 0"


# --- diagonal cubics -------------------------------------------------------------------


def _chain_record(alpha, steps: list[str]) -> tuple[list[dict], Any]:
    """Residues of ``alpha`` along ``steps``, outermost first."""
    records = []
    current = alpha
    for v in steps:
        res = residue(current, v)
        records.append(
            {
                "variable": v,
                "class": str(current),
                "residue": str(res),
                "nonzero": not res.is_zero(),
            }
        )
        current = res
    return records, current


def _diagonal_chain(F_chain: TowerField, chain: list[Monomial], outer: list[str]):
    """Symbol checks shared by both diagonal methods."""
    classes = [class_of(x, F_chain, 3) for x in chain]
    plain = field_symbol(F_chain, 3, classes)
    alpha = field_symbol(F_chain, 3, classes, tokens=(TOKEN,))
    symbol_check = Check(
        "symbol_nonzero",
        {"symbol": str(plain), "witness": [list(m) for m in nonvanishing_witness(plain)], "result": not plain.is_zero()},
    )
    steps, final = _chain_record(alpha, outer)
    for i, rec in enumerate(steps):
        rec["step"] = len(steps) - i
    chain_check = Check(
        "residue_chain",
        {
            "steps": steps,
            "final": str(final),
            "result": all(r["nonzero"] for r in steps) and not final.is_zero(),
        },
    )
    return symbol_check, chain_check


def _diagonal_axioms(
    k: TowerField, F: TowerField, F_chain: TowerField, a_text: str, a_class, coeffs: list[str], cubes: list[str]
) -> list[Axiom]:
    axioms = [
        Axiom(
            MANIN,
            {"symbol": f"({TOKEN}, a)", "a": a_text, "a_class": list(a_class), "field": str(k)},
        ),
        Axiom(
            MILNOR,
            {
                "divisors": ["x+y=0", "x+jy=0"],
                "coefficients": coeffs,
                "variables": cubes,
                "relation": milnor_relation(coeffs, cubes),
            },
        ),
    ]
    padding = list(F.variables[F_chain.height :])
    if padding:
        axioms.append(Axiom(LAURENT_SPECIALIZATION, {"chain_field": str(F_chain), "padding": padding, "field": str(F)}))
    return axioms


def build_diagonal_certificate(F: TowerField, a: Monomial, n: int) -> ObstructionCertificate:
    """``x^3 + y^3 + z^3 + a*w^3 + sum l_i*t_i^3`` with the unramified class ``(token, a, l_1..l_n)``.

    ``a`` lives over ``k``, the base plus the innermost variables ``a``
    involves; the next ``n`` variables play the ``l_i`` and any remaining
    outer variables are padding handled by specialization.
    """
    F.base.require_admissible(3)
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    involved = [i for i, e in enumerate(a.exps) if e]
    s = involved[-1] + 1 if involved else 0
    if s + n > F.height:
        raise PreconditionError(
            f"a uses {s} variable(s) and n={n} more are needed, but {F} has height {F.height}"
        )
    k = F.truncate(s)
    a_k = a.drop(F.height - s)
    a_class = class_of(a_k, k, 3)
    if a_class.is_zero():
        raise HypothesisError("a is a cube")
    F_chain = F.truncate(s + n)
    lambdas = list(F_chain.variables[s:])
    a_text = format_monomial(a_k, k)
    chain = [a.drop(F.height - s - n)] + [Monomial.variable(F_chain, v) for v in lambdas]
    symbol_check, chain_check = _diagonal_chain(F_chain, chain, list(reversed(lambdas)))
    coeffs = [a_text] + lambdas
    cubes = ["w"] + [f"t{i}" for i in range(1, n + 1)]
    equation = _sum(["x^3", "y^3", "z^3"] + [_term(c, f"{v}^3") for c, v in zip(coeffs, cubes)])
    return ObstructionCertificate(
        method=DIAGONAL,
        field=str(F),
        N=n + 3,
        equation=equation,
        witness={"field": str(F), "a": format_monomial(a, F), "n": n},
        checks=(
            Check("a_not_cube", {"a": a_text, "over": str(k), "class": list(a_class.coords), "result": True}),
            symbol_check,
            chain_check,
        ),
        axioms=tuple(_diagonal_axioms(k, F, F_chain, a_text, a_class.coords, coeffs, cubes)),
        conclusion=NOT_CH0_TRIVIAL,
    )


def build_diagonal_padic_certificate(F: TowerField, a: Monomial, n: int) -> ObstructionCertificate:
    """``x^3 + y^3 + z^3 + a*w^3 + pi*t^3 + sum l_i*t_i^3`` over a p-adic tower, p != 3."""
    if F.base.kind != PADIC:
        raise PreconditionError(f"the p-adic method needs a p-adic base, got {F.base}")
    if F.base.p == 3:
        raise UnsupportedError("p = 3 is excluded")
    F.base.require_admissible(3)
    if not 0 <= n <= F.height:
        raise PreconditionError(f"n={n} outside 0..{F.height}")
    if any(a.exps) or pi_valuation(F.base, a) != 0:
        raise PreconditionError("a must be a unit of the base")
    k = F.truncate(0)
    a_k = a.drop(F.height)
    a_class = class_of(a_k, k, 3)
    if a_class.is_zero():
        raise HypothesisError("a is a cube")
    F_chain = F.truncate(n)
    lambdas = list(F_chain.variables)
    pi = Monomial(1, (0,) * n, pi=1)
    a_text = format_monomial(a_k, k)
    chain = [a.drop(F.height - n), pi] + [Monomial.variable(F_chain, v) for v in lambdas]
    symbol_check, chain_check = _diagonal_chain(F_chain, chain, list(reversed(lambdas)) + ["pi"])
    coeffs = [a_text, "pi"] + lambdas
    cubes = ["w", "t"] + [f"t{i}" for i in range(1, n + 1)]
    equation = _sum(["x^3", "y^3", "z^3"] + [_term(c, f"{v}^3") for c, v in zip(coeffs, cubes)])
    return ObstructionCertificate(
        method=DIAGONAL_PADIC,
        field=str(F),
        N=n + 4,
        equation=equation,
        witness={"field": str(F), "a": format_monomial(a, F), "n": n},
        checks=(
            Check("a_not_cube", {"a": a_text, "over": str(k), "class": list(a_class.coords), "result": True}),
            symbol_check,
            chain_check,
        ),
        axioms=tuple(_diagonal_axioms(k, F, F_chain, a_text, a_class.coords, coeffs, cubes)),
        conclusion=NOT_CH0_TRIVIAL,
    )


# --- quadric fibrations -------------------------------------------------------------------


def build_fibered_quadric_witness(
    k: TowerField, phi: PfisterForm, rho: Monomial, m: int, q: DiagonalQuadraticForm | None = None
) -> ObstructionCertificate:
    """``q(x)*v = u*(u - v)*(u - rho*v)`` deformed over ``k((t))``, with ``q`` a subform of ``phi``."""
    if not 2 <= m <= 2**phi.fold:
        raise PreconditionError(f"need 2 <= m <= 2^{phi.fold}, got m={m}")
    if phi.field != k:
        raise PreconditionError("phi is not defined over k")
    expansion = expand_pfister(phi)
    if q is None:
        q = DiagonalQuadraticForm(k, expansion.coeffs[:m])
    if q.dim != m:
        raise PreconditionError(f"q has dimension {q.dim}, expected m={m}")
    if not is_anisotropic(expansion):
        raise HypothesisError("phi is isotropic")
    if pfister_represents(phi, rho):
        raise HypothesisError("rho represented by phi")
    extended = PfisterForm(k, phi.slots + (rho,))
    if not is_anisotropic(expand_pfister(extended)):
        raise HypothesisError("<<phi, rho>> is isotropic")
    if not is_pfister_subform_syntactic(q, phi):
        raise HypothesisError("q is not a syntactic subform of phi")
    if not is_anisotropic(q):
        raise HypothesisError("q is isotropic")
    t = k.fresh_variable()
    K = k.extend(t)
    rho_text = format_monomial(rho, k)
    zeros = ",".join(["0"] * m)
    A, B = f"({zeros},1,1)", f"({zeros},{rho_text},1)"
    equation = f"({_quadratic_sum(q)})*v - u*(u - v)*(u - {_paren(rho_text)}*v) + {t}*Psi"
    return ObstructionCertificate(
        method=FIBERED,
        field=str(K),
        N=m + 1,
        equation=equation,
        witness={"k": str(k), "phi": format_pfister(phi), "rho": rho_text, "m": m, "q": format_form(q)},
        checks=(
            Check("phi_anisotropic", {"form": format_form(expansion), "result": True}),
            Check("rho_not_represented", {"phi": format_pfister(phi), "rho": rho_text, "result": True}),
            Check("phi_rho_anisotropic", {"pfister": format_pfister(extended), "result": True}),
            Check("q_subform", {"q": format_form(q), "phi": format_pfister(phi), "result": True}),
            Check("q_anisotropic", {"q": format_form(q), "result": True}),
            Check("evaluation", {"A": A, "B": B, "value_A": "1", "value_B": rho_text, "result": True}),
        ),
        axioms=(
            Axiom(DPHI, {"phi": format_pfister(phi), "rho": rho_text, "values": ["1", rho_text]}),
            Axiom(R_SPECIALIZATION, {"parameter": t, "points": [A, B], "special_fibre": f"{t}=0"}),
            Axiom(SMOOTHING, {"parameter": t, "deformation": f"{t}*Psi"}),
        ),
        conclusion=NOT_RETRACT_RATIONAL,
    )


def _paren(text: str) -> str:
    return f"({text})" if text.startswith("-") else text


def build_quadric_pair_witness(k: TowerField, lexp: int) -> ObstructionCertificate:
    """``(q(x) + x0^2)*x0`` deformed over ``k((t))`` with ``q`` anisotropic of dimension ``2^lexp``."""
    if lexp < 2:
        raise PreconditionError(f"lexp must be at least 2 (N = 2^{lexp} = {2**lexp} < 3)" if lexp >= 0 else "lexp < 0")
    dim = 2**lexp
    u = u_invariant(k)
    if dim > u:
        raise HypothesisError(f"2^{lexp} = {dim} exceeds u({k}) = {u}")
    slots = canonical_pfister_slots(k, lexp)
    if slots is None:
        raise HypothesisError(f"no canonical {lexp}-fold Pfister form over {k}")
    q = expand_pfister(PfisterForm(k, slots))
    if not is_anisotropic(q):
        raise HypothesisError("canonical form is isotropic")
    t = k.fresh_variable()
    K = k.extend(t)
    form = format_form(q)
    return ObstructionCertificate(
        method=QUADRIC_PAIR,
        field=str(K),
        N=dim,
        equation=f"({_quadratic_sum(q)} + x0^2)*x0 + {t}*G",
        witness={"k": str(k), "lexp": lexp},
        checks=(Check("q_anisotropic", {"q": form, "dim": dim, "over": str(k), "result": True}),),
        axioms=(
            Axiom(HOFFMANN, {"form": form, "dim": dim, "quadric": "q + <1>"}),
            Axiom(SPRINGER_INDEX, {"form": form, "anisotropic_over": str(k), "over": str(K)}),
            Axiom(CHOW_SPECIALIZATION, {"parameter": t, "special_fibre": f"{t}=0", "variant": "quadric pair"}),
            Axiom(SMOOTHING, {"parameter": t, "deformation": f"{t}*G"}),
        ),
        conclusion=NOT_CH0_TRIVIAL,
    )


# --- real cubics ----------------------------------------------------------------------------


def build_real_witness(n: int) -> ObstructionCertificate:
    """``sum x_i^2 * v - u*(u - v)*(u + v) + t*S`` whose real locus has two components."""
    if n < 2:
        raise PreconditionError(f"need n >= 2 squares, got n={n}")
    f = RationalCubic.from_roots(-1, 0, 1)
    report = component_report(n, f)
    squares = " + ".join(f"x{i}^2" for i in range(1, n + 1))
    cubes = " + ".join([f"x{i}^3" for i in range(1, n + 1)] + ["u^3", "v^3"])
    intervals = [[_root_text(a), None if b is None else _root_text(b)] for a, b in report.intervals]
    return ObstructionCertificate(
        method=REAL,
        field="R",
        N=n + 1,
        equation=f"({squares})*v - u*(u - v)*(u + v) + t*S, S = {cubes}",
        witness={"n": n},
        checks=(Check("components", {"f": str(f), "intervals": intervals, "result": report.count}),),
        axioms=(
            Axiom(EHRESMANN, {"components": report.count, "perturbation": "t*S"}),
            Axiom(REAL_CH0, {"components": report.count, "scope": "every subfield of R"}),
            Axiom(SMOOTHING, {"parameter": "t", "deformation": "t*S"}),
        ),
        conclusion=NOT_CH0_TRIVIAL,
    )


def _root_text(r) -> str:
    if isinstance(r, tuple):
        return f"root in ({r[0]}, {r[1]}]"
    return str(r)


# --- verification -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        return "Valid" if self.valid else f"Invalid: {self.reason}"


def _rebuild(method: str, w: Mapping[str, Any]) -> ObstructionCertificate:
    if method in (DIAGONAL, DIAGONAL_PADIC):
        F = parse_field(w["field"])
        build = build_diagonal_certificate if method == DIAGONAL else build_diagonal_padic_certificate
        return build(F, parse_monomial(w["a"], F), _int(w["n"]))
    if method == FIBERED:
        k = parse_field(w["k"])
        return build_fibered_quadric_witness(
            k, parse_pfister(w["phi"], k), parse_monomial(w["rho"], k), _int(w["m"]), parse_form(w["q"], k)
        )
    if method == QUADRIC_PAIR:
        return build_quadric_pair_witness(parse_field(w["k"]), _int(w["lexp"]))
    return build_real_witness(_int(w["n"]))


def _int(x: Any) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected an integer, got {x!r}")
    return x


def _pattern_manin(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    if h.get("symbol") != f"({TOKEN}, a)":
        return "Manin base case applied to the wrong symbol"
    if not any(int(x) % 3 for x in h.get("a_class", [])):
        return "Manin base case needs a non-cube a"
    return None


def _pattern_milnor(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    coeffs = list(h.get("coefficients", []))
    cubes = list(h.get("variables", []))
    if h.get("divisors") != ["x+y=0", "x+jy=0"]:
        return "Milnor relation recorded on the wrong divisors"
    if not coeffs or len(coeffs) != len(cubes) or h.get("relation") != milnor_relation(coeffs, cubes):
        return "Milnor relation does not match its coefficients"
    terms = _sum(["x^3", "y^3", "z^3"] + [_term(a, f"{v}^3") for a, v in zip(coeffs, cubes)])
    if terms != c.equation:
        return "Milnor relation does not come from the witness equation"
    return None


def _pattern_laurent(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    padded = h.get("chain_field", "") + "".join(f"[[{v}]]" for v in h.get("padding", []))
    if not h.get("padding") or padded != c.field or h.get("field") != c.field:
        return "specialization padding does not rebuild the field"
    return None


def _pattern_hoffmann(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    dim = h.get("dim")
    entries = h.get("form", "<>").strip("<>").split(",")
    if not isinstance(dim, int) or dim < 4 or dim & (dim - 1) or len(entries) != dim or dim != c.N:
        return "Hoffmann's theorem needs an anisotropic form of dimension 2^l >= 4 equal to N"
    return None


def _pattern_springer(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    k, K = h.get("anisotropic_over", ""), h.get("over", "")
    if K != c.field or not K.startswith(k + "[[") or K.count("[[") != k.count("[[") + 1:
        return "Springer index step is not a one-variable Laurent extension"
    return None


def _last_variable(field_text: str) -> str:
    return field_text.rsplit("[[", 1)[-1].rstrip("]") if "[[" in field_text else ""


def _pattern_parameter(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    t = h.get("parameter")
    if c.method != REAL and t != _last_variable(c.field):
        return "deformation parameter is not the outermost variable"
    if f"{t}*" not in c.equation:
        return "deformation parameter does not occur in the equation"
    return None


def _pattern_dphi(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    values = h.get("values", [])
    if len(values) != 2 or values[0] != "1" or values[1] != h.get("rho") or values[1] == "1":
        return "D^phi pairing needs the values 1 and rho with rho != 1"
    return None


def _pattern_requivalence(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    if len(h.get("points", [])) != 2:
        return "R-equivalence specialization needs the two points A and B"
    return _pattern_parameter(h, c)


def _pattern_components(h: Mapping[str, Any], c: ObstructionCertificate) -> str | None:
    if not isinstance(h.get("components"), int) or h["components"] < 2:
        return "real argument needs at least two components"
    return None


AXIOM_PATTERNS: dict[str, Callable[[Mapping[str, Any], ObstructionCertificate], str | None]] = {
    MANIN: _pattern_manin,
    MILNOR: _pattern_milnor,
    LAURENT_SPECIALIZATION: _pattern_laurent,
    HOFFMANN: _pattern_hoffmann,
    SPRINGER_INDEX: _pattern_springer,
    CHOW_SPECIALIZATION: _pattern_parameter,
    SMOOTHING: _pattern_parameter,
    DPHI: _pattern_dphi,
    R_SPECIALIZATION: _pattern_requivalence,
    EHRESMANN: _pattern_components,
    REAL_CH0: _pattern_components,
}


def _check_passes(check: Check) -> bool:
    r = check.result
    if isinstance(r, bool):
        return r
    return check.name == "components" and isinstance(r, int) and r >= 2


def verify_certificate(cert: ObstructionCertificate | Mapping[str, Any]) -> Verdict:
    """Re-derive ``cert`` from its witness inputs; never raises."""
    try:
        c = cert if isinstance(cert, ObstructionCertificate) else from_dict(cert)
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        return Verdict(False, f"malformed certificate: {exc}")
    if c.version != VERSION:
        return Verdict(False, f"unsupported version {c.version!r}")
    if c.method not in TEMPLATES:
        return Verdict(False, f"unknown method {c.method!r}")
    checks, axioms, conclusion = TEMPLATES[c.method]
    names = [x.name for x in c.checks]
    missing = [x for x in checks if x not in names]
    if missing:
        return Verdict(False, f"missing check {missing[0]}")
    for x in c.checks:
        if not _check_passes(x):
            return Verdict(False, f"check {x.name} failed")
    cited = [a.name for a in c.axioms]
    for a in axioms:
        if a not in cited:
            return Verdict(False, f"missing axiom {a}")
    if c.conclusion != conclusion:
        return Verdict(False, f"conclusion {c.conclusion!r} does not follow the {c.method} template")
    try:
        rebuilt = _rebuild(c.method, c.witness)
    except CertError as exc:
        return Verdict(False, str(exc))
    except (KeyError, TypeError) as exc:
        return Verdict(False, f"malformed witness: {exc}")
    mine, theirs = rebuilt.to_dict(), c.to_dict()
    for key in ("field", "N", "equation", "witness", "checks", "axioms"):
        if mine[key] != theirs[key]:
            return Verdict(False, f"{key} does not match the rebuilt certificate")
    for a in c.axioms:
        pattern = AXIOM_PATTERNS.get(a.name)
        if pattern is None:
            return Verdict(False, f"unknown axiom {a.name!r}")
        problem = pattern(a.hypothesis, c)
        if problem:
            return Verdict(False, problem)
    return Verdict(True)


# --- survey tables ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class SurveyTable:
    base: str
    n: int
    rows: tuple[tuple[str, tuple[int, ...]], ...]
    union: tuple[int, ...] = field(init=False)
    open: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        union = sorted(set().union(*(set(r) for _, r in self.rows)))
        object.__setattr__(self, "union", tuple(union))
        gaps = [N for N in range(3, union[-1] + 1) if N not in union] if union else []
        object.__setattr__(self, "open", tuple(gaps))

    @property
    def max(self) -> int | None:
        return self.union[-1] if self.union else None

    def row(self, name: str) -> tuple[int, ...]:
        return dict(self.rows)[name]

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "n": self.n,
            "rows": {name: list(values) for name, values in self.rows},
            "union": list(self.union),
            "open": list(self.open),
            "open_beyond": self.max,
        }

    def render(self) -> str:
        def fmt(values) -> str:
            return ",".join(map(str, values)) if values else "none"

        lines = [f"survey base={self.base} n={self.n}"]
        lines += [f"{name:<15}: {fmt(values)}" for name, values in self.rows]
        lines.append(f"{'union':<15}: {fmt(self.union)}")
        lines.append(f"{'open':<15}: {fmt(self.open)}")
        if self.max is not None:
            lines.append(f"{'beyond':<15}: N > {self.max}")
        return "\n".join(lines) + "\n"


def _powers_of_two(limit: int) -> tuple[int, ...]:
    out, N = [], 4
    while N <= limit:
        out.append(N)
        N *= 2
    return tuple(out)


def survey(base: str, n: int) -> SurveyTable:
    """Ambient dimensions reached by each method over the height-``n`` tower of ``base``."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    if base in ("complex", COMPLEX):
        rows = (
            (QUADRIC_PAIR, _powers_of_two(2 ** (n - 1)) if n >= 1 else ()),
            (FIBERED, tuple(range(3, 2 ** (n - 2) + 2)) if n >= 2 else ()),
            (DIAGONAL, tuple(range(3, n + 3))),
            ("classical", (3,) if n >= 1 else ()),
        )
        return SurveyTable("complex", n, rows)
    if base in ("padic", PADIC):
        rows = (
            (QUADRIC_PAIR, _powers_of_two(2 ** (n + 1))),
            (FIBERED, tuple(range(3, 2**n + 2))),
            (DIAGONAL_PADIC, tuple(range(4, n + 5))),
            ("cited-padic", (4,)),
        )
        return SurveyTable("padic", n, rows)
    raise UnsupportedError(f"survey base must be complex or padic, got {base!r}")


def constructive_witness(n: int, N: int) -> ObstructionCertificate:
    """A certificate over ``E_n = C((t1))...((tn))`` with ambient dimension ``N``.

    Tries the quadric-pair, fibered and diagonal constructions in turn.
    """
    E = laurent_tower(n)
    if N in _powers_of_two(2 ** (n - 1)) and n >= 1:
        return build_quadric_pair_witness(E.truncate(n - 1), N.bit_length() - 1)
    if n >= 3 and 3 <= N <= 2 ** (n - 2) + 1:
        k = E.truncate(n - 1)
        phi = PfisterForm(k, tuple(Monomial.variable(k, v) for v in k.variables[:-1]))
        return build_fibered_quadric_witness(k, phi, Monomial.variable(k, k.variables[-1]), N - 1)
    if n >= 1 and 3 <= N <= n + 2:
        return build_diagonal_certificate(E, Monomial.variable(E, "t1"), N - 3)
    raise HypothesisError(f"no construction reaches N={N} over E_{n}")
