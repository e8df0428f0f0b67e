"""Built-in algebras and solution families, stored as algebra-file text.

Each entry holds a verified presentation and, where the literal reference
form differs from it, that literal variant as well (``printed``).  The
literal variants are kept so the differences stay checkable; ``relations()``
returns the verified one unless asked otherwise.  Expected metadata (form
label, PBW verdict, Casimir degree, degree map) is recorded here and checked
by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .freealg import NCPoly
from .parsing import parse_algebra_file, parse_expression
from .relations import RelationSet

__all__ = ["CatalogEntry", "get", "instantiate", "list_entries"]


@dataclass(frozen=True)
class CatalogEntry:
    identifier: str
    summary: str
    text: str
    label: str | None = None  # canonical form of [B,A], None when not quadratic
    pbw: bool = True  # constraints vanish identically under the exclusions
    casimir_degree: int | None = None  # lowest degree with a nonzero Casimir
    casimir: str | None = None
    degree_map: tuple | None = None  # find_degree_map(relations(), 6)
    printed: str | None = None
    printed_casimir: str | None = None
    printed_params: tuple = ()  # extra symbols that only occur in printed_casimir
    corrections: tuple = field(default_factory=tuple)

    def relations(self, printed: bool = False) -> RelationSet:
        text = self.printed if printed and self.printed is not None else self.text
        return parse_algebra_file(text)

    @property
    def exclusions(self) -> list:
        return list(self.relations().assumptions)

    def casimir_poly(self, printed: bool = False) -> NCPoly:
        """The recorded Casimir as an (unreduced) polynomial in the generators."""
        R = self.relations()
        if printed and self.printed_casimir is not None:
            src, params = self.printed_casimir, R.params + self.printed_params
        else:
            src, params = self.casimir, R.params
        if src is None:
            raise KeyError(f"catalog entry {self.identifier!r} has no recorded Casimir")
        return parse_expression(" ".join(src.split()), R.generators, params)


def _algebra(*lines: str) -> str:
    return "\n".join(lines) + "\n"


_DASKALOYANNIS_CASIMIR = """
C^2 - alpha*{A^2,B} - beta*{A,B^2} + (alpha*beta - gamma)*{A,B} + (beta^2 - delta)*B^2
+ (beta*gamma - 2*epsilon)*B + 2/3*nu*A^3 + (xi + nu*beta/3 + alpha^2)*A^2
+ (nu*delta/3 + alpha*gamma + 2*zeta)*A
"""

_DASKALOYANNIS_CASIMIR_PRINTED = """
C^2 - alpha*{A^2,B} - beta*{A,B^2} + (alpha*beta - gamma)*{A,B} + (beta^2 - delta)*B^2
+ (beta*gamma - 2*zeta)*B + 2*a/3*A^3 + (xi + nu*beta/3 + alpha^2)*A^2
+ (nu*delta/3 + alpha*gamma + 2*zeta)*A
"""

_FORM_1A_CASIMIR = """
-(beta*eta*lambda^2 + 3*beta*eta*lambda + 3*beta*eta + zeta*lambda*epsilon + zeta*epsilon)*(lambda+1)*A
- (-alpha*lambda^4*epsilon - 5*alpha*lambda^3*epsilon - 10*alpha*lambda^2*epsilon - 9*alpha*lambda*epsilon
   - 3*alpha*epsilon + beta*delta*lambda^3 + 5*beta*delta*lambda^2 + 9*beta*delta*lambda + 6*beta*delta
   + gamma*eta*lambda^2 + 2*gamma*eta*lambda + gamma*eta)*B
+ gamma*(lambda+1)*(lambda+2)*B^3
- (-alpha*beta*lambda^3 - 4*alpha*beta*lambda^2 - 6*alpha*beta*lambda - 3*alpha*beta + gamma*zeta*lambda
   + gamma*zeta + delta*lambda^2 + 3*delta*lambda + 3*delta)*(lambda+1)*C
- (beta*zeta*lambda^2 + 3*beta*zeta*lambda + 2*beta*zeta + eta*lambda^3 + 4*eta*lambda^2 + 6*eta*lambda
   + 3*eta)*(lambda+1)*A^2
- (lambda+1)*(lambda+2)*(-alpha*beta*lambda^3 - 4*alpha*beta*lambda^2 - 6*alpha*beta*lambda - 3*alpha*beta
   + gamma*zeta*lambda + gamma*zeta + delta*lambda^2 + 3*delta*lambda + 3*delta)*A*B
- (-alpha*lambda^3 - 4*alpha*lambda^2 - 6*alpha*lambda - 3*alpha)*(lambda+1)*(lambda+2)*A*C
- (-alpha*gamma*lambda^4 - 6*alpha*gamma*lambda^3 - 13*alpha*gamma*lambda^2 - 12*alpha*gamma*lambda
   - 4*alpha*gamma + beta^2*lambda^3 + 5*beta^2*lambda^2 + 9*beta^2*lambda + 6*beta^2 - lambda^3*epsilon
   - 4*lambda^2*epsilon - 6*lambda*epsilon - 3*epsilon)*B^2
- beta*(lambda^2 + 3*lambda + 3)*(lambda+1)*(lambda+2)*B*C
- (lambda^2 + 3*lambda + 3)*(lambda+1)^2*C^2
+ alpha*(lambda^2 + 3*lambda + 3)*(lambda+1)^3*(lambda+2)*A^2*B
- (beta*lambda^2 + 3*beta*lambda + 3*beta)*(lambda+1)*(lambda+2)*A*B^2
- (lambda^3 + 3*lambda^2 + 3*lambda)*(lambda+1)*(lambda+2)*A*B*C
- zeta*(lambda+1)^3*(lambda+2)*A^3
"""

_FORM_1B_CASIMIR = """
-1/6*(3*beta*eta - 6*gamma*eta - 2*zeta*epsilon)*A
- 1/3*(3*alpha*epsilon - 3*beta*delta + 4*gamma*delta - gamma*eta - 4*gamma*epsilon)*B
- 1/6*(-3*alpha*beta + 6*alpha*gamma + 3*beta^2 - 6*beta*gamma - 2*gamma*zeta + 6*delta - 6*epsilon)*C
- 1/3*(beta*zeta - 4*gamma*zeta - 3*eta)*A^2
- 1/3*(-3*alpha*beta + 6*alpha*gamma + 3*beta^2 - 6*beta*gamma - 2*gamma*zeta + 6*delta - 6*epsilon)*A*B
- 1/6*(8*alpha*gamma - 3*beta^2 + 2*beta*gamma - 8*gamma^2 + 6*epsilon)*B^2
- (beta - 2*gamma)*B*C + C^2 + 2*(beta - alpha)*A^2*B - (beta - 2*gamma)*A*B^2
- (2*alpha - beta - 2*gamma)*A*C + 2*A^2*C + 2/3*A^3*zeta - 2/3*gamma*B^3
"""

_FORM_2D_CASIMIR = """
(zeta*lambda^2 + 3*zeta*lambda + 3*zeta + epsilon)*(lambda+1)*A
- (lambda^2 + 3*lambda + 3)*((alpha + gamma)*(lambda+1)*(lambda+2) + (beta*lambda + 2*beta - delta*lambda - delta))*B
- (-zeta*lambda^2 - 3*zeta*lambda - 3*zeta - lambda*epsilon - 3*epsilon)*(lambda+1)^2*A^2
- (lambda^2 + 3*lambda + 3)*(2*alpha*lambda + 2*alpha + beta + gamma*lambda + gamma)*(lambda+1)*(lambda+2)*A*B
- (-lambda^2 - 3*lambda - 3)*(lambda+1)*(lambda+2)*A*C
- (lambda^2 + 3*lambda + 3)*(beta*(-lambda) - 2*beta + delta*lambda + delta)*B^2
- (-lambda^2 - 3*lambda - 3)*(lambda+1)*(lambda+2)*B*C
+ epsilon*(lambda+1)^3*(lambda+2)*A^3
- alpha*(lambda^2 + 3*lambda + 3)*(lambda+1)^3*(lambda+2)*A^2*B
+ beta*(lambda^2 + 3*lambda + 3)*(lambda+1)*(lambda+2)*A*B^2
+ lambda*(lambda^2 + 3*lambda + 3)*(lambda+1)*(lambda+2)*A*B*C
"""

_QUARTIC_CASIMIR = """
3*c300*A^4 - 12*b300*A^3*B + (4*c200 + (3*b020*(4*a200 - 3*b300) - 2*b001)*c300)*A^3
+ 6*(-2*b200 + 4*a200*(b001 - b020*b300) + b020*(6*b300^2 + c300))*A^2*B
+ 6*(2*a200 - 3*b300)*A^2*C + 12*(b020*(a200 - 2*b300) - b001)*A*B^2 - 4*b020*B^3
+ (-c300*b001^2 - (4*c200 + a200*b020*c300)*b001 + 6*c100 + 8*a200*b020*c200 - 12*b020*b300*c200
   + 3*b010*c300 + 3*b020*b200*c300)*A^2
+ 2*(12*b001*b020*a200^2 - 6*(2*b001^2 + 5*b020*b300*b001 - b010 + b020*b200)*a200 + 12*b001*b020*b300^2
   - 6*b100 + 6*b001*b200 + 6*b001^2*b300 - 9*b010*b300 + 12*b020*b200*b300 + 2*b020*c200
   + 2*b001*b020*c300)*A*B
+ 6*(2*b020*a200^2 + (2*b001 - 7*b020*b300)*a200 + 6*b020*b300^2 - 2*b200 + b001*b300 + b020*c300)*A*C
+ 2*(6*b001^2 - 2*b020*(a200 - 4*b300)*b001 - 3*b010
   + b020*(4*b020*a200^2 - 10*b020*b300*a200 - 4*b200 + b020*(6*b300^2 + c300)))*B^2
+ 6*(b020*(2*a200 - 3*b300) - 2*b001)*B*C + 6*C^2
+ (6*a200*b020*c100 - 12*b020*b300*c100 + 2*b010*c200 + 3*b020*b100*c300 - b001*(6*c100 + b010*c300))*A
+ 2*(4*b010*b020*a200^2 - 2*b020*(2*b100 + 5*b010*b300)*a200 + 6*b010*b020*b300^2 - 3*b010*b200
   + 6*b020*b100*b300 + 3*b001*(2*b100 + b010*b300) + b020*c100 + b010*b020*c300)*B
+ 2*(6*b001*b020*a200^2 - 3*(2*b001^2 + 5*b020*b300*b001 - b010 + b020*b200)*a200 + 6*b001*b020*b300^2
   - 3*b100 + 3*b001*b200 + 3*b001^2*b300 - 3*b010*b300 + 6*b020*b200*b300 + b020*c200
   + b001*b020*c300)*C
"""

_GENERAL_QUADRATIC_PARAMS = (
    "b200 b110 b101 b020 b100 b010 b001 c200 c110 c101 c020 c011 c100 c010 c001"
)
_GENERAL_QUADRATIC_CA = (
    "rel: [C,A] = b200*A^2 + b110*A*B + b101*A*C + b020*B^2 + b100*A + b010*B + b001*C"
)
_GENERAL_QUADRATIC_CB = (
    "rel: [C,B] = c200*A^2 + c110*A*B + c101*A*C + c020*B^2 + c011*B*C + c100*A + c010*B + c001*C"
)

_ENTRIES = [
    CatalogEntry(
        "daskaloyannis",
        "quadratic algebra with [B,A] = -C; Racah algebra at nu = 0",
        _algebra(
            "generators: A B C",
            "params: alpha beta gamma delta epsilon nu xi zeta",
            "rel: [B,A] = -C",
            "rel: [C,A] = -alpha*A^2 - 2*beta*A*B + beta*C - gamma*A - delta*B - epsilon",
            "rel: [C,B] = -nu*A^2 + 2*alpha*A*B - alpha*C + beta*B^2 - xi*A + gamma*B - zeta",
        ),
        label="1a",
        casimir_degree=3,
        casimir=_DASKALOYANNIS_CASIMIR,
        degree_map=(1, 1, 1),
        printed_casimir=_DASKALOYANNIS_CASIMIR_PRINTED,
        printed_params=("a",),
        corrections=(
            "Casimir: A^3 coefficient 2*nu/3 (literal form uses an undefined symbol a)",
            "Casimir: B coefficient beta*gamma - 2*epsilon (literal form uses zeta)",
        ),
    ),
    CatalogEntry(
        "daskaloyannis-cubic",
        "cubic extension with mu*A^3 in [C,B]",
        _algebra(
            "generators: A B C",
            "degrees: A=1 B=2 C=2",
            "params: alpha beta gamma delta epsilon mu nu xi zeta",
            "rel: [B,A] = C",
            "rel: [C,A] = alpha*A^2 + 2*beta*A*B + gamma*A + delta*B + beta*C + epsilon",
            "rel: [C,B] = mu*A^3 + nu*A^2 - 2*alpha*A*B - beta*B^2 + xi*A - gamma*B - alpha*C + zeta",
        ),
        label=None,
        casimir_degree=4,
        degree_map=(1, 2, 2),
    ),
    CatalogEntry(
        "general-cubic",
        "all 26 cubic-degree terms; PBW only on the variety cut out by its constraints",
        _algebra(
            "generators: A B C",
            "params: a300 a200 a100 a010 a001 b300 b210 b120 b030 b200 b110 b020 b100 b010 b001"
            " c300 c210 c120 c030 c200 c110 c101 c020 c100 c010 c001",
            "mode: permissive cap=10000",
            "rel: [B,A] = a300*A^3 + a200*A^2 + a100*A + a010*B + a001*C",
            "rel: [C,A] = b300*A^3 + b210*A^2*B + b120*A*B^2 + b030*B^3 + b200*A^2 + b110*A*B"
            " + b020*B^2 + b100*A + b010*B + b001*C",
            "rel: [C,B] = c300*A^3 + c210*A^2*B + c120*A*B^2 + c030*B^3 + c200*A^2 + c110*A*B"
            " + c101*A*C + c020*B^2 + c100*A + c010*B + c001*C",
        ),
        pbw=False,
    ),
    CatalogEntry(
        "general-quadratic",
        "all 20 quadratic terms; PBW only on the variety cut out by its constraints",
        _algebra(
            "generators: A B C",
            f"params: a200 a110 a100 a010 a001 {_GENERAL_QUADRATIC_PARAMS}",
            "rel: [B,A] = a200*A^2 + a110*A*B + a100*A + a010*B + a001*C",
            _GENERAL_QUADRATIC_CA,
            _GENERAL_QUADRATIC_CB,
        ),
        label="1a",
        pbw=False,
        degree_map=(1, 1, 1),
    ),
    CatalogEntry(
        "general-quadratic-1a",
        "general quadratic with [B,A] in canonical form 1a",
        _algebra(
            "generators: A B C",
            f"params: a110 {_GENERAL_QUADRATIC_PARAMS}",
            "rel: [B,A] = a110*A*B + C",
            _GENERAL_QUADRATIC_CA,
            _GENERAL_QUADRATIC_CB,
        ),
        label="1a",
        pbw=False,
        degree_map=(1, 1, 1),
    ),
    CatalogEntry(
        "calabi-yau-omega",
        "one-parameter cubic family with omega*B^2 in [C,A]",
        _algebra(
            "generators: A B C",
            "degrees: A=2 B=3 C=4",
            "params: omega",
            "rel: [B,A] = C",
            "rel: [C,A] = A^2 + 2*A*B + omega*B^2 + A + B + C",
            "rel: [C,B] = A^3 + A^2 - 2*A*B - B^2 + A - B - C",
        ),
        label=None,
        casimir_degree=4,
        degree_map=(2, 3, 4),
        printed=_algebra(
            "generators: A B C",
            "degrees: A=2 B=3 C=4",
            "params: omega",
            "rel: [B,A] = C",
            "rel: [C,A] = A^2 + 2*A*B + omega*B^2 + A + B + C",
            "rel: [C,B] = A^3 + A^2 - 2*A*B - (1-omega)*B^2 + A + B - C",
        ),
        corrections=("[C,B]: B^2 coefficient -1 and B coefficient -1",),
    ),
    CatalogEntry(
        "rho-sigma-omega",
        "cubic family with rho*A^2 in [B,A] and sigma*A^3 in [C,A]",
        _algebra(
            "generators: A B C",
            "degrees: A=2 B=3 C=4",
            "params: rho sigma omega",
            "rel: [B,A] = rho*A^2 + C",
            "rel: [C,A] = sigma*A^3 + A^2 + 2*A*B + omega*B^2 + A + B + C",
            "rel: [C,B] = A^3 - 3*sigma*A^2*B + A^2 + (4*rho - 2*sigma - 2)*A*B + (2*rho - 3*sigma)*A*C"
            " + (omega*rho - omega*sigma - 1)*B^2 + A + (rho - sigma - 1)*B + (2*rho - sigma - 1)*C",
        ),
        label=None,
        casimir_degree=4,
        degree_map=(2, 3, 4),
        printed=_algebra(
            "generators: A B C",
            "params: rho sigma omega",
            "mode: permissive cap=10000",
            "rel: [B,A] = rho*A^2 + C",
            "rel: [C,A] = sigma*A^3 + A^2 + 2*A*B + omega*B^2 + A + B + C",
            "rel: [C,B] = A^3 - 3*sigma*A^2*C + A^2 - 2*A*B + (2*rho - 3*sigma)*A*C"
            " - (1 + sigma*omega - omega)*B^2 + A + (1 - sigma)*B - C",
        ),
        corrections=(
            "[C,B]: -3*sigma*A^2*B in place of -3*sigma*A^2*C",
            "[C,B]: AB, B^2, B and C coefficients follow the cubic-parametric family",
        ),
    ),
    CatalogEntry(
        "cubic-parametric-quartic-casimir",
        "ten-parameter cubic family with a quartic Casimir",
        _algebra(
            "generators: A B C",
            "degrees: A=2 B=3 C=4",
            "params: a200 b300 b200 b001 b100 b020 b010 c300 c200 c100",
            "rel: [B,A] = C + a200*A^2",
            "rel: [C,A] = b300*A^3 + b200*A^2 + 2*b001*A*B + b100*A + b020*B^2 + b010*B + b001*C",
            "rel: [C,B] = c300*A^3 - 3*b300*A^2*B + c200*A^2 - 2*(b300*b001 - 2*b001*a200 + b200)*A*B"
            " + (2*a200 - 3*b300)*A*C + (-b001 + a200*b020 - b020*b300)*B^2 + c100*A"
            " + (-b300*b010 + a200*b010 - b100)*B + (-b300*b001 + 2*a200*b001 - b200)*C",
        ),
        label=None,
        casimir_degree=4,
        casimir=_QUARTIC_CASIMIR,
        degree_map=(2, 3, 4),
    ),
    CatalogEntry(
        "form-1a-casimir",
        "form 1a family with a cubic Casimir (lambda != -1)",
        _algebra(
            "generators: A B C",
            "params: lambda alpha beta gamma delta epsilon zeta eta",
            "assume: lambda + 1",
            "rel: [B,A] = C + lambda*A*B",
            "rel: [C,A] = alpha*A^2 - (lambda+2)/(lambda+1)*beta*A*B - lambda/(lambda+1)*A*C + gamma*B^2"
            " - 1/(lambda+1)*delta*A + epsilon*B - 1/(lambda+1)*beta*C",
            "rel: [C,B] = zeta*A^2 - (lambda+1)*(lambda+2)*alpha*A*B + beta*B^2 + lambda*B*C + eta*A"
            " + delta*B - (lambda+1)*alpha*C",
        ),
        label="1a",
        casimir_degree=3,
        casimir=_FORM_1A_CASIMIR,
        degree_map=(1, 1, 1),
        printed=_algebra(
            "generators: A B C",
            "params: lambda alpha beta gamma delta epsilon zeta eta",
            "assume: lambda + 1",
            "rel: [B,A] = C + lambda*A*B",
            "rel: [C,A] = alpha*A^2 - (lambda+2)/(lambda+1)*beta*A*B - lambda/(lambda+1)*A*C + gamma*B^2"
            " + 1/(lambda+1)*delta*A + epsilon*B - 1/(lambda+1)*beta*C",
            "rel: [C,B] = zeta*A^2 - (lambda+1)*(lambda+2)*alpha*A*B + beta*B^2 + lambda*B*C + eta*A"
            " + delta*B - (lambda+1)*alpha*C",
        ),
        corrections=("[C,A]: A coefficient -delta/(lambda+1)",),
    ),
    CatalogEntry(
        "form-1a-nocasimir-lambda-nonzero",
        "form 1a family without a Casimir (lambda != 0, -1)",
        _algebra(
            "generators: A B C",
            "params: lambda alpha",
            "assume: lambda",
            "assume: lambda + 1",
            "rel: [B,A] = lambda*A*B + C",
            "rel: [C,A] = lambda*A*C - (1+lambda)^2*alpha^2/lambda^2*B + 2*alpha*(1+lambda)/lambda*C",
            "rel: [C,B] = alpha*B^2 - lambda/(1+lambda)*B*C",
        ),
        label="1a",
        degree_map=(1, 1, 1),
        printed=_algebra(
            "generators: A B C",
            "params: lambda alpha",
            "assume: lambda",
            "assume: lambda + 1",
            "rel: [B,A] = lambda*A*B + C",
            "rel: [C,A] = lambda*A*C - (1+lambda)^2*alpha/lambda^2*B + 2*alpha*(1+lambda)/lambda*C",
            "rel: [C,B] = alpha*B^2 - lambda/(1+lambda)*B*C",
        ),
        corrections=("[C,A]: B coefficient -(1+lambda)^2*alpha^2/lambda^2",),
    ),
    CatalogEntry(
        "form-1a-nocasimir-lambda-zero",
        "form 1a family without a Casimir (lambda = 0); A and C close on their own",
        _algebra(
            "generators: A B C",
            "params: alpha beta gamma",
            "assume: alpha",
            "assume: 1 + alpha",
            "rel: [B,A] = C",
            "rel: [C,A] = -alpha/(1+alpha)*A*C + beta*A",
            "rel: [C,B] = gamma*A*C + alpha*B*C - (1+alpha)*beta*gamma/alpha*A - (1+alpha)*beta*B",
        ),
        label="1a",
        degree_map=(1, 1, 1),
    ),
    CatalogEntry(
        "form-1a-lambda-minus-one",
        "form 1a family at lambda = -1, where BA rewrites to C alone",
        _algebra(
            "generators: A B C",
            "params: alpha gamma delta",
            "assume: 1 + gamma",
            "rel: [B,A] = -A*B + C",
            "rel: [C,A] = alpha*A^2 - gamma/(1+gamma)*A*C",
            "rel: [C,B] = -(alpha + delta + alpha*gamma)/(1+gamma)*A*B + gamma*B*C"
            " - alpha*(alpha + delta + alpha*gamma)*A + delta*C",
        ),
        label="1a",
        degree_map=(1, 1, 1),
        printed=_algebra(
            "generators: A B C",
            "params: alpha beta gamma delta epsilon zeta",
            "assume: 1 + gamma",
            "assume: beta",
            "rel: [B,A] = -A*B + C",
            "rel: [C,A] = alpha*A^2 + beta*A*B - gamma/(1+gamma)*A*C + alpha*beta*(1+gamma)*A",
            "rel: [C,B] = (-alpha - delta - alpha*gamma)/(1+gamma)*A*B + epsilon*B^2 + gamma*B*C"
            " - alpha*(alpha + delta + alpha*gamma)*A"
            " - zeta*(alpha + delta + alpha*gamma)/(beta*(1+gamma))*B + delta*C",
        ),
        corrections=(
            "beta = 0 is forced: the B*C row gives epsilon = -beta*(1+gamma)^2 and the B^2 row"
            " then gives beta^2*(1+gamma)^3 = 0; with beta = 0 the epsilon and zeta terms drop",
        ),
    ),
    CatalogEntry(
        "form-1b",
        "form 1b family with a cubic Casimir (lambda = 0)",
        _algebra(
            "generators: A B C",
            "params: alpha beta gamma delta epsilon zeta eta",
            "rel: [B,A] = A^2 + C",
            "rel: [C,A] = alpha*A^2 + beta*A*B + gamma*B^2 + delta*A + epsilon*B + beta/2*C",
            "rel: [C,B] = zeta*A^2 + 2*(beta-alpha)*A*B + 2*A*C + (2*gamma-beta)/2*B^2 + eta*A"
            " + (epsilon-delta)*B + (beta-alpha)*C",
        ),
        label="1b",
        casimir_degree=3,
        casimir=_FORM_1B_CASIMIR,
        degree_map=(1, 1, 1),
    ),
    CatalogEntry(
        "form-2d",
        "form 2d family with a cubic Casimir (lambda != -1); A and B do not generate C",
        _algebra(
            "generators: A B C",
            "params: lambda alpha beta gamma delta epsilon zeta",
            "assume: lambda + 1",
            "rel: [B,A] = lambda*A*B + A + B",
            "rel: [C,A] = alpha*A^2 - (lambda+2)/(1+lambda)*beta*A*B - lambda/(1+lambda)*A*C"
            " + gamma*A + delta*B - 1/(1+lambda)*C",
            "rel: [C,B] = epsilon*A^2 - (lambda+1)*(lambda+2)*alpha*A*B + beta*B^2 + lambda*B*C"
            " + zeta*A - ((lambda+1)*(gamma+alpha)+beta)*B + C",
        ),
        label="2d",
        casimir_degree=3,
        casimir=_FORM_2D_CASIMIR,
        degree_map=(1, 1, 1),
        printed=_algebra(
            "generators: A B C",
            "params: lambda alpha beta gamma delta epsilon zeta",
            "assume: lambda + 1",
            "rel: [B,A] = lambda*A*B + A + B",
            "rel: [C,A] = alpha*A^2 - (2*beta+lambda)/(1+lambda)*beta*A*B - lambda/(1+lambda)*A*C"
            " + gamma*A + delta*B - 1/(1+lambda)*C",
            "rel: [C,B] = epsilon*A^2 - (lambda+1)*(lambda+2)*alpha*A*B + beta*B^2 + lambda*B*C"
            " + zeta*A - ((lambda+1)*(gamma+alpha)+beta)*B + C",
        ),
        corrections=("[C,A]: A*B coefficient -(lambda+2)*beta/(1+lambda)",),
    ),
    CatalogEntry(
        "central-extension",
        "lambda = -1 quadratic family with central terms c1, c2, c3 (c1 free)",
        _algebra(
            "generators: A B C",
            "params: b200 b110 b010 c001 c011 c1",
            "assume: b110",
            "assume: c011 + 1",
            "rel: [B,A] = -A*B + C + c1",
            "rel: [C,A] = b200*A^2 + b110*A*B - c011/(c011+1)*A*C + b110*b200*(c011+1)*A + b010*B"
            " + (b010/(b110*(c011+1)) - b110*(c011+1))*C"
            " - c1*(b110^2*c011 + b110^2 - b010)/(b110*(c011+1))",
            "rel: [C,B] = -(b200 + c001/(c011+1))*A*B - b010/b110*B^2 + c011*B*C"
            " - b200*(b200*(c011+1) + c001)*A - b010*(b200*(c011+1) + c001)/(b110*(c011+1))*B"
            " + c001*C + c1*(c001/(c011+1) - b200*c011)",
        ),
        label="1a",
        degree_map=(1, 1, 1),
    ),
]

_BY_ID = {e.identifier: e for e in _ENTRIES}


def list_entries() -> list:
    """(identifier, summary) pairs in a fixed order."""
    return [(e.identifier, e.summary) for e in _ENTRIES]


def get(identifier: str) -> CatalogEntry:
    try:
        return _BY_ID[identifier]
    except KeyError:
        raise KeyError(f"unknown catalog entry {identifier!r}") from None


def instantiate(
    identifier: str, assignment: Mapping[str, object] | None = None, printed: bool = False
) -> RelationSet:
    """The entry's relations with some parameters fixed.

    Raises ValueError naming the exclusion when the assignment makes an
    assumed-nonzero polynomial vanish.
    """
    R = get(identifier).relations(printed)
    assignment = dict(assignment or {})
    unknown = set(assignment) - set(R.params)
    if unknown:
        raise KeyError(f"unknown parameters for {identifier}: {sorted(unknown)}")
    for p in R.assumptions:
        if p.substitute(assignment).is_zero():
            raise ValueError(f"{identifier} requires {p} != 0")
    return R.substitute(assignment)
