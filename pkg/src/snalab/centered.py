"""Centers and the conditions deciding when an SNA is a full twist.

The center is the fixed point of ``~``.  With center ``c``:

(CK)  for ``x, y >= c`` with ``x ^ y <= c`` some ``z`` has
      ``z v c = x`` and ``~z v c = y``;
(C)   if ``(x ^ y) -> 0 = 1`` some ``z`` has ``z v c = x v c`` and
      ``~z v c = y v c``.

Both are equivalent to ``rho`` being onto, that is, to ``T`` being
isomorphic to the twist of its quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import SnaAlgebra, require_sna, verify_kleene
from .errors import NoCenter, PreconditionFailed, VerificationError
from .srl import Srl
from .twist import quotient_srl, rho


def find_center(T: SnaAlgebra) -> int | None:
    """The unique fixed point of ``~`` or None."""
    v = verify_kleene(T)
    if not v.ok:
        raise PreconditionFailed(f"not a Kleene algebra: {v.failures[0]}", witness=v.failures[0].witness)
    return T.center


def _require_center(T) -> int:
    c = find_center(T)
    if c is None:
        raise NoCenter("the algebra has no center")
    return c


def _solvable(T, c, x, y) -> bool:
    j, neg = np.asarray(T.join_table), np.asarray(T.neg_table)
    return bool(np.any((j[:, c] == x) & (j[neg, c] == y)))


def check_ck(T: SnaAlgebra) -> tuple[bool, tuple[str, str] | None]:
    """(CK) with the least failing pair ``(x, y)``."""
    c = _require_center(T)
    le, m = np.asarray(T.order), np.asarray(T.meet_table)
    for x in range(T.n):
        if not le[c, x]:
            continue
        for y in range(T.n):
            if le[c, y] and le[m[x, y], c] and not _solvable(T, c, x, y):
                return False, (T.names[x], T.names[y])
    return True, None


def check_c(T: SnaAlgebra) -> tuple[bool, tuple[str, str] | None]:
    """(C) with the least failing pair; must agree with :func:`check_ck`."""
    c = _require_center(T)
    m, j, imp = np.asarray(T.meet_table), np.asarray(T.join_table), np.asarray(T.imp_table)
    result: tuple[bool, tuple[str, str] | None] = (True, None)
    for x in range(T.n):
        for y in range(T.n):
            if imp[m[x, y], T.bottom] == T.top and not _solvable(T, c, j[x, c], j[y, c]):
                result = (False, (T.names[x], T.names[y]))
                break
        if not result[0]:
            break
    if result[0] != check_ck(T)[0]:
        raise VerificationError("(C) and (CK) disagree")
    return result


@dataclass
class CenterReport:
    center: str | None
    ck_holds: bool | None = None
    ck_witness: tuple | None = None
    c_holds: bool | None = None
    c_witness: tuple | None = None
    rho_surjective: bool | None = None

    def lines(self) -> list[str]:
        if self.center is None:
            return ["center: none", f"rho surjective: {_yn(self.rho_surjective)}"]
        out = [f"center: {self.center}"]
        for label, ok, w in (("CK", self.ck_holds, self.ck_witness), ("C", self.c_holds, self.c_witness)):
            out.append(f"{label}: holds" if ok else f"{label}: fails at x={w[0]}, y={w[1]}")
        out.append(f"rho surjective: {_yn(self.rho_surjective)}")
        return out


def _yn(b):
    return "n/a" if b is None else ("yes" if b else "no")


def center_report(T: SnaAlgebra) -> CenterReport:
    c = find_center(T)
    surj = rho(T).surjective
    if c is None:
        return CenterReport(None, rho_surjective=surj)
    ck, ckw = check_ck(T)
    cc, cw = check_c(T)
    if not (ck == cc == surj):
        raise VerificationError(f"CK={ck}, C={cc} and rho surjective={surj} disagree")
    return CenterReport(T.names[c], ck, ckw, cc, cw, surj)


@dataclass
class TwistRepresentation:
    representable: bool
    reason: str
    srl: Srl | None = None
    rho_map: tuple[int, ...] | None = None


def representable_as_twist(T: SnaAlgebra) -> TwistRepresentation:
    """Decide whether ``T`` is isomorphic to ``K(A)`` for an sr-lattice ``A``.
    When it is, ``A`` is the quotient and ``rho`` is a verified isomorphism."""
    require_sna(T, "twist representation")
    c = find_center(T)
    r = rho(T)
    if c is None:
        if r.surjective:
            raise VerificationError("centerless algebra has surjective rho")
        return TwistRepresentation(False, "no center")
    ck, w = check_ck(T)
    if ck != r.surjective:
        raise VerificationError("(CK) disagrees with surjectivity of rho")
    if not ck:
        return TwistRepresentation(False, f"(CK) fails at x={w[0]}, y={w[1]}")
    return TwistRepresentation(True, "center and (CK)", quotient_srl(T).srl, r.map)
