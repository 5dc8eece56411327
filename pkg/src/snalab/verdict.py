"""Exhaustive law checking over operation tables.

A :class:`Law` is a vectorised predicate over open index grids.  Running a
list of laws yields a :class:`Verdict`; each failing law records the
index-lexicographically least failing tuple and the number of failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import SimpleNamespace
from typing import Callable, Sequence

import numpy as np


@dataclass(frozen=True)
class Law:
    name: str
    statement: str
    variables: tuple[str, ...]
    holds: Callable
    # optional: ops -> list of index arrays, one per variable
    domains: Callable | None = None


@dataclass
class Failure:
    law: str
    statement: str
    witness: dict[str, str]
    count: int
    witnesses: list[dict[str, str]] = field(default_factory=list)

    def __str__(self):
        w = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        more = f" (+{self.count - 1} more)" if self.count > 1 else ""
        return f"{self.law}: {self.statement} fails at {w}{more}"


@dataclass
class Verdict:
    suite: str
    failures: list[Failure]
    checked: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def failure(self, law: str) -> Failure | None:
        for f in self.failures:
            if f.law == law:
                return f
        return None

    def failed_laws(self) -> list[str]:
        return [f.law for f in self.failures]

    def lines(self) -> list[str]:
        if self.ok:
            return [f"{self.suite}: pass ({len(self.checked)} laws)"]
        return [f"{self.suite}: FAIL"] + [f"  {f}" for f in self.failures]

    def __str__(self):
        return "\n".join(self.lines())


def tables(A) -> SimpleNamespace:
    """Short-name view of an algebra's tables for writing laws."""
    return SimpleNamespace(
        m=A.meet_table,
        j=A.join_table,
        i=getattr(A, "imp_table", None),
        n=getattr(A, "neg_table", None),
        le=A.order,
        one=A.top,
        zero=A.bottom,
        size=A.n,
    )


def check_laws(suite: str, A, laws: Sequence[Law], full_report: bool = False) -> Verdict:
    ops = tables(A)
    names = A.names
    failures = []
    for law in laws:
        if law.domains is None:
            doms = [np.arange(A.n)] * len(law.variables)
        else:
            doms = [np.asarray(d) for d in law.domains(ops)]
        if any(len(d) == 0 for d in doms):
            continue
        grids = np.ix_(*doms) if doms else ()
        shape = tuple(len(d) for d in doms)
        mask = np.broadcast_to(np.asarray(law.holds(ops, *grids), dtype=bool), shape)
        bad = np.argwhere(~mask)
        if len(bad):
            def as_witness(row):
                return {v: names[int(doms[k][row[k]])] for k, v in enumerate(law.variables)}

            failures.append(
                Failure(
                    law.name,
                    law.statement,
                    as_witness(bad[0]),
                    len(bad),
                    [as_witness(r) for r in bad] if full_report else [],
                )
            )
    return Verdict(suite, failures, tuple(law.name for law in laws))


def implies(p, q):
    return ~np.asarray(p) | np.asarray(q)
