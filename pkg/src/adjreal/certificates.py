"""Reverser certificates and their zero-tolerance verification.

A certificate packages an algebra element X, a claimed reverser g, the
acting context, and an involution claim.  Verification re-derives every
assertion exactly: group membership, invertibility, g X g^{-1} = -X, and
the involution claim (g^2 = I, or g^2 a scalar matrix for PSL/PSp).  Any
failure is reported by naming the violated equation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .liecore import LieContext, algebra_member, jn_matrix
from .matrix import ExactMatrix, det


@dataclass(frozen=True)
class ReverserCertificate:
    element: ExactMatrix
    reverser: ExactMatrix
    context: LieContext
    claims_involution: bool = False

    def to_json(self):
        return {
            "element": self.element.to_json(),
            "reverser": self.reverser.to_json(),
            "context": self.context.to_json(),
            "claims_involution": self.claims_involution,
        }

    @staticmethod
    def from_json(data) -> "ReverserCertificate":
        try:
            return ReverserCertificate(
                element=ExactMatrix.from_json(data["element"]),
                reverser=ExactMatrix.from_json(data["reverser"]),
                context=LieContext.from_json(data["context"]),
                claims_involution=bool(data.get("claims_involution", False)),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad certificate JSON: {exc}") from exc


@dataclass
class VerificationReport:
    ok: bool
    failures: list = field(default_factory=list)

    def to_json(self):
        return {"verified": self.ok, "failures": list(self.failures)}


def _group_failure(g: ExactMatrix, ctx: LieContext) -> str | None:
    size = ctx.matrix_size
    if not g.is_square() or g.rows != size:
        return f"GroupMembership(size != {size})"
    d = det(g)
    if d.is_zero():
        return "Invertibility(det g = 0)"
    if ctx.group == "GL":
        return None
    if ctx.group in ("SL", "PSL"):
        return None if d == 1 else "GroupMembership(det g != 1)"
    if ctx.group in ("O", "SO"):
        if not (g.transpose() * g == ExactMatrix.identity(size)):
            return "GroupMembership(g^t g != I)"
        if ctx.group == "SO" and d != 1:
            return "GroupMembership(det g != 1)"
        return None
    j = jn_matrix(ctx.n)
    if not (g.transpose() * j * g == j):
        return "GroupMembership(g^t J g != J)"
    return None


def verify_certificate(cert: ReverserCertificate) -> VerificationReport:
    """Exact verification; failures name the violated equations."""
    failures = []
    x, g, ctx = cert.element, cert.reverser, cert.context
    size = ctx.matrix_size
    if not x.is_square() or x.rows != size:
        failures.append(f"ElementShape(size != {size})")
        return VerificationReport(False, failures)
    if not algebra_member(x, ctx):
        failures.append(f"AlgebraMembership(X not in {ctx.algebra})")
    gf = _group_failure(g, ctx)
    if gf is not None:
        failures.append(gf)
    else:
        # g X g^-1 = -X, checked multiplicatively as g X + X g = 0
        if not (g * x + x * g).is_zero():
            failures.append("Anticonjugation(g X g^-1 != -X)")
        if cert.claims_involution:
            g2 = g * g
            if ctx.is_projective:
                if not _is_nonzero_scalar(g2):
                    failures.append("InvolutionClaim(g^2 not a central scalar)")
            elif not (g2 == ExactMatrix.identity(size)):
                failures.append("InvolutionClaim(g^2 != I)")
    return VerificationReport(not failures, failures)


def _is_nonzero_scalar(m: ExactMatrix) -> bool:
    c = m[0, 0]
    if c.is_zero():
        return False
    return m == ExactMatrix.identity(m.rows).scale(c)
