"""Printed closed forms checked against computed values.

Claim IDs are stable strings so findings can be diffed between runs:

INDEX-THM     general Sombor index theorem (both cases)
INDEX-PKQ     index corollary for n = p^k q
INDEX-PQR     index corollary for n = pqr
SPECTRUM-THM  multiplicities in the general spectrum theorem
AF-1          largest eigenvalue of the complete case
AF-2          p^k q spectrum corollary
AF-3          pqr spectrum corollary
AF-4          closed-form energies (p^k and p^k q)
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .numtheory import factorize, totient
from .sombor_index import (
    pkq_index_printed,
    pkq_parameters,
    pqr_index_printed,
    pqr_parameters,
    sombor_formula,
)
from .spectral import SQRT2, Spectrum, energy, pk_energy_printed, pkq_energy_printed
from .structure import CompressedGraph

FLAG_TOL = 1e-9


@dataclass(frozen=True)
class AuditFinding:
    claim_id: str
    quantity: str
    printed_value: float
    computed_value: float
    abs_delta: float

    @property
    def flagged(self) -> bool:
        return self.abs_delta > FLAG_TOL * max(1.0, abs(self.computed_value))

    def to_dict(self) -> dict:
        out = asdict(self)
        out["flagged"] = self.flagged
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "AuditFinding":
        return cls(
            data["claim_id"],
            data["quantity"],
            data["printed_value"],
            data["computed_value"],
            data["abs_delta"],
        )


def _finding(claim: str, quantity: str, printed: float, computed: float) -> AuditFinding:
    return AuditFinding(claim, quantity, float(printed), float(computed), abs(float(printed) - float(computed)))


def audit_index(n: int, so_direct: float) -> list[AuditFinding]:
    fac = factorize(n)
    if fac.is_prime:
        return []
    value, _case = sombor_formula(n)
    out = [_finding("INDEX-THM", "sombor_index", value, so_direct)]
    if (pkq := pkq_parameters(fac)) is not None:
        out.append(_finding("INDEX-PKQ", "sombor_index", pkq_index_printed(*pkq), so_direct))
    if (pqr := pqr_parameters(fac)) is not None:
        out.append(_finding("INDEX-PQR", "sombor_index", pqr_index_printed(*pqr), so_direct))
    return out


def audit_spectrum(g: CompressedGraph, spectrum: Spectrum) -> list[AuditFinding]:
    """Printed spectral statements against ``spectrum`` (any route)."""
    n = g.n
    fac = factorize(n)
    if fac.is_prime:
        return []
    N = g.order
    clique_value = -SQRT2 * (N - 1)
    clique_mult = spectrum.multiplicity(clique_value) if N >= 2 else 0
    zero_mult = spectrum.multiplicity(0.0)
    out: list[AuditFinding] = []

    if fac.m == 0:
        out.append(_finding("AF-1", "largest_eigenvalue", SQRT2 * N**2, spectrum.largest()))
        out.append(_finding("AF-1", "clique_multiplicity", N - 1, clique_mult))
        if len(fac.factors) == 1:
            p, k = fac.factors[0]
            out.append(_finding("AF-4", "energy_pk", pk_energy_printed(p, k), energy(spectrum)))
    else:
        sizes = [totient(n // p) for p in fac.simple_primes]
        K = N - sum(sizes)
        out.append(_finding("SPECTRUM-THM", "clique_multiplicity", K - 1, clique_mult))
        out.append(_finding("SPECTRUM-THM", "zero_multiplicity", sum(sizes) - fac.m, zero_mult))

    if (pkq := pkq_parameters(fac)) is not None:
        p, k, q = pkq
        a = p ** (k - 1) * q
        phi = totient(p**k)
        out.append(_finding("AF-2", "clique_multiplicity", a - 1, clique_mult))
        out.append(_finding("AF-2", "clique_eigenvalue", -SQRT2 * (a + phi - 1), clique_value))
        out.append(_finding("AF-2", "zero_multiplicity", phi - 1, zero_mult))
        out.append(_finding("AF-4", "energy_pkq", pkq_energy_printed(p, k, q), energy(spectrum)))

    if (pqr := pqr_parameters(fac)) is not None:
        p, q, r = pqr
        big = p * (q - 1) + q * (r - 1) + r * (p - 1)
        zero_printed = (p - 1) * (q - 1) + (p - 1) * (r - 1) + (q - 1) * (r - 1) - 4
        out.append(_finding("AF-3", "zero_multiplicity", zero_printed, zero_mult))
        out.append(_finding("AF-3", "clique_multiplicity", p + q + r - 4, clique_mult))
        out.append(_finding("AF-3", "clique_eigenvalue", -SQRT2 * (big - 4), clique_value))
    return out


def flag_count(findings: list[AuditFinding]) -> int:
    return sum(1 for f in findings if f.flagged)

