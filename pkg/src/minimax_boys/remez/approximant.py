from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from mpmath import mp


def horner(coeffs: Sequence, x):
    """Evaluate an ascending-degree coefficient vector at x (works for float and mpf)."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class RationalApproximant:
    """r = p/q with ascending monomial coefficients and a monic denominator.

    Coefficients are either all mpf (generator side) or all float (deployed
    tables). ``domain`` is the closed interval the approximant was built for.
    """

    numer: Tuple
    denom: Tuple
    domain: Optional[Tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "numer", tuple(self.numer))
        object.__setattr__(self, "denom", tuple(self.denom))
        if not self.numer or not self.denom:
            raise ValueError("empty coefficient vector")
        if self.denom[-1] != 1:
            raise ValueError(f"denominator is not monic: leading coefficient {self.denom[-1]}")

    @property
    def n(self) -> int:
        return len(self.numer) - 1

    @property
    def m(self) -> int:
        return len(self.denom) - 1

    def __call__(self, x):
        return horner(self.numer, x) / horner(self.denom, x)

    def to_double(self) -> "RationalApproximant":
        """Round every coefficient once to the nearest double."""
        dom = None if self.domain is None else tuple(float(v) for v in self.domain)
        return RationalApproximant(
            tuple(float(c) for c in self.numer), tuple(float(c) for c in self.denom), dom
        )

    def to_hp(self) -> "RationalApproximant":
        return RationalApproximant(
            tuple(mp.mpf(c) for c in self.numer), tuple(mp.mpf(c) for c in self.denom), self.domain
        )


def make_monic(numer: Sequence, denom: Sequence, domain=None) -> RationalApproximant:
    lead = denom[-1]
    if lead == 0:
        raise ZeroDivisionError("denominator has a vanishing leading coefficient (defect)")
    return RationalApproximant(
        tuple(c / lead for c in numer), tuple(c / lead for c in denom[:-1]) + (mp.one,), domain
    )
