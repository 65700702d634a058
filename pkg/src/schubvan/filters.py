"""Cheap sufficient conditions for ``c^w_{u,v} = 0`` in type A.

Each filter returns a :class:`FilterCertificate` naming the rule that fired.
No certificate means "undecided", never "nonzero".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .weyl import Permutation, bruhat_leq, des, descents, inversions, long_element, LieType, zeta

__all__ = ["FilterCertificate", "filter_vanish", "FILTER_ORDER", "knutson_set"]

FILTER_ORDER = ("Degree", "Bruhat", "Descents", "Knutson", "ZetaRows")


@dataclass(frozen=True)
class FilterCertificate:
    name: str
    witness: dict[str, Any] = field(default_factory=dict)

    def explain(self) -> str:
        w = self.witness
        if self.name == "Degree":
            return f"Degree: inv(u)+inv(v) = {w['inv_u']}+{w['inv_v']} != inv(w) = {w['inv_w']}"
        if self.name == "Bruhat":
            return f"Bruhat: {w['smaller']} is not below {w['w']} in Bruhat order"
        if self.name == "Descents":
            return f"Descents: des(w) = {w['des_w']} > des(u)+des(v) = {w['des_u']}+{w['des_v']}"
        if self.name == "Knutson":
            return f"Knutson: common descent {w['position']} of u, v and w0*w"
        if self.name == "ZetaRows":
            return f"ZetaRows: zeta(w) = {w['zeta_w']} > zeta(u)+zeta(v) = {w['zeta_u']}+{w['zeta_v']}"
        return self.name


def knutson_set(u: Permutation, v: Permutation, w: Permutation) -> set[int]:
    """``Des(u) & Des(v) & Des(w0 * w)`` with all three padded to a common size.

    With ``(a * b)(i) = a(b(i))`` the factor ``w0`` must sit on the left; the
    other orientation produces false certificates already in ``S_4``.
    """
    n = max(u.n, v.n, w.n)
    w0 = long_element(LieType("A", n))
    return descents(u.pad(n)) & descents(v.pad(n)) & descents(w0 * w.pad(n))


def filter_vanish(u: Permutation, v: Permutation, w: Permutation) -> FilterCertificate | None:
    """First vanishing rule that fires, in the order of :data:`FILTER_ORDER`."""
    n = max(u.n, v.n, w.n)
    u, v, w = u.pad(n), v.pad(n), w.pad(n)

    iu, iv, iw = inversions(u), inversions(v), inversions(w)
    if iu + iv != iw:
        return FilterCertificate("Degree", {"inv_u": iu, "inv_v": iv, "inv_w": iw})

    for smaller in (u, v):
        if not bruhat_leq(smaller, w):
            return FilterCertificate("Bruhat", {"smaller": str(smaller), "w": str(w)})

    du, dv, dw = des(u), des(v), des(w)
    if dw > du + dv:
        return FilterCertificate("Descents", {"des_u": du, "des_v": dv, "des_w": dw})

    common = knutson_set(u, v, w)
    if common:
        return FilterCertificate("Knutson", {"position": min(common)})

    zu, zv, zw = zeta(u), zeta(v), zeta(w)
    if zw > zu + zv:
        return FilterCertificate("ZetaRows", {"zeta_u": zu, "zeta_v": zv, "zeta_w": zw})
    return None
