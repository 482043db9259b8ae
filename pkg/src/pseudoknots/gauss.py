"""Gauss diagrams of pseudoknots.

A Gauss diagram is the cyclic sequence of crossing passages met along the
knot, drawn on a counterclockwise core circle.  Classical crossings
contribute an arrow from the over passage to the under passage plus a
sign; precrossings contribute an arrow whose direction is the one the
classical arrow would take under the positive resolution.

Token grammar (comma separated):

    O<id><sign>   classical over passage (arrow origin), sign in {+,-}
    U<id><sign>   classical under passage (arrow target)
    Ph<id>        precrossing passage that is the over strand of the
                  positive resolution
    Pt<id>        the complementary precrossing passage

Virtual pseudoknots are accepted: any token sequence satisfying the pairing
rules is a valid diagram here, planar or not.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .diagram import PseudoPD, positive_over_is_strand_two, traversal_darts


class GaussError(ValueError):
    """Invalid Gauss code text or structure."""


# classical roles
OVER = "O"
UNDER = "U"
# precrossing roles
PRE_HEAD = "h"
PRE_TAIL = "t"


@dataclass(frozen=True)
class GaussToken:
    id: int
    role: str  # O, U, h, t
    sign: int | None  # +-1 for classical tokens, None for precrossing tokens

    def is_classical(self) -> bool:
        return self.role in (OVER, UNDER)

    def to_text(self) -> str:
        if self.role == OVER:
            return f"O{self.id}{'+' if self.sign > 0 else '-'}"
        if self.role == UNDER:
            return f"U{self.id}{'+' if self.sign > 0 else '-'}"
        return f"P{self.role}{self.id}"


@dataclass(frozen=True)
class PseudoGaussDiagram:
    """Validated cyclic token sequence; position 0 is the base point."""

    tokens: tuple[GaussToken, ...]

    def __post_init__(self):
        by_id: dict[int, list[GaussToken]] = {}
        for tok in self.tokens:
            if tok.role not in (OVER, UNDER, PRE_HEAD, PRE_TAIL):
                raise GaussError(f"unknown role {tok.role!r}")
            if tok.is_classical() and tok.sign not in (1, -1):
                raise GaussError(f"classical token {tok.id} needs a sign")
            if not tok.is_classical() and tok.sign is not None:
                raise GaussError(f"precrossing token {tok.id} cannot carry a sign")
            by_id.setdefault(tok.id, []).append(tok)
        for id_, toks in by_id.items():
            if len(toks) != 2:
                raise GaussError(f"id {id_} appears {len(toks)} times (must be exactly 2)")
            a, b = toks
            if {a.role, b.role} not in ({OVER, UNDER}, {PRE_HEAD, PRE_TAIL}):
                raise GaussError(f"id {id_}: roles {a.role}/{b.role} are not complementary")
            if a.sign != b.sign:
                raise GaussError(f"id {id_}: the two tokens carry different signs")

    @property
    def size(self) -> int:
        return len(self.tokens)

    def ids(self) -> list[int]:
        return sorted({t.id for t in self.tokens})

    def precrossing_ids(self) -> list[int]:
        return sorted({t.id for t in self.tokens if not t.is_classical()})

    def classical_ids(self) -> list[int]:
        return sorted({t.id for t in self.tokens if t.is_classical()})

    def is_all_classical(self) -> bool:
        return all(t.is_classical() for t in self.tokens)

    def positions_of(self, id_: int) -> tuple[int, int]:
        pos = [i for i, t in enumerate(self.tokens) if t.id == id_]
        return (pos[0], pos[1])

    def to_text(self) -> str:
        return ",".join(t.to_text() for t in self.tokens)

    def to_json_dict(self) -> dict:
        return {
            "tokens": [
                {
                    "id": t.id,
                    "role": {"O": "over-origin", "U": "under-target", "h": "head", "t": "tail"}[t.role],
                    **({"sign": t.sign} if t.is_classical() else {}),
                }
                for t in self.tokens
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "PseudoGaussDiagram":
        role_map = {"over-origin": OVER, "under-target": UNDER, "head": PRE_HEAD, "tail": PRE_TAIL}
        toks = []
        for t in data["tokens"]:
            role = role_map.get(t["role"])
            if role is None:
                raise GaussError(f"unknown role {t['role']!r}")
            toks.append(GaussToken(t["id"], role, t.get("sign")))
        return cls(tuple(toks))


_GAUSS_TOKEN_RE = re.compile(r"\s*(?:(O|U)(\d+)([+\-−])|P(h|t)(\d+))\s*$")


def parse_gauss(text: str) -> PseudoGaussDiagram:
    """Parse a comma-separated extended Gauss code."""
    chunks = [c for c in text.strip().split(",")]
    if chunks == [""]:
        raise GaussError("empty Gauss code")
    toks = []
    for i, chunk in enumerate(chunks):
        m = _GAUSS_TOKEN_RE.match(chunk)
        if not m:
            raise GaussError(f"syntax error in token {i + 1}: {chunk.strip()!r}")
        if m.group(1):
            sign = 1 if m.group(3) == "+" else -1
            toks.append(GaussToken(int(m.group(2)), m.group(1), sign))
        else:
            toks.append(GaussToken(int(m.group(5)), m.group(4), None))
    return PseudoGaussDiagram(tuple(toks))


def resolve_gauss(g: PseudoGaussDiagram, choice: dict[int, int]) -> PseudoGaussDiagram:
    """Resolve precrossings: +1 turns Ph into O+ and Pt into U+; -1 reverses
    the arrow and flips the sign (Ph -> U-, Pt -> O-)."""
    pre = set(g.precrossing_ids())
    if set(choice) != pre:
        missing, extra = pre - set(choice), set(choice) - pre
        raise GaussError(f"choice ids mismatch (missing {sorted(missing)}, extra {sorted(extra)})")
    out = []
    for t in g.tokens:
        if t.is_classical():
            out.append(t)
            continue
        c = choice[t.id]
        if c not in (1, -1):
            raise GaussError(f"choice for {t.id} must be +1 or -1")
        if c == 1:
            out.append(GaussToken(t.id, OVER if t.role == PRE_HEAD else UNDER, 1))
        else:
            out.append(GaussToken(t.id, UNDER if t.role == PRE_HEAD else OVER, -1))
    return PseudoGaussDiagram(tuple(out))


def pd_to_gauss(d: PseudoPD) -> PseudoGaussDiagram:
    """Gauss diagram of a pseudodiagram, following the strand traversal."""
    toks = []
    for vi, slot in traversal_darts(d):
        v = d.vertices[vi]
        if v.is_classical():
            role = UNDER if slot == 0 else OVER
            toks.append(GaussToken(v.id, role, v.sign))
        else:
            head_is_two = positive_over_is_strand_two(d, vi)
            on_strand_two = slot != 0
            role = PRE_HEAD if on_strand_two == head_is_two else PRE_TAIL
            toks.append(GaussToken(v.id, role, None))
    return PseudoGaussDiagram(tuple(toks))


def mirror_gauss(g: PseudoGaussDiagram) -> PseudoGaussDiagram:
    """Swap over/under and flip signs on classical arrows; precrossing
    arrows reverse (the positive resolution of the mirror is the old
    negative one, which points the other way)."""
    out = []
    for t in g.tokens:
        if t.is_classical():
            out.append(GaussToken(t.id, UNDER if t.role == OVER else OVER, -t.sign))
        else:
            out.append(GaussToken(t.id, PRE_TAIL if t.role == PRE_HEAD else PRE_HEAD, None))
    return PseudoGaussDiagram(tuple(out))
