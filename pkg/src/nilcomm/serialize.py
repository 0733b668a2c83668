"""Canonical JSON and text literals for weights and decompositions."""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import NotationError
from .weights import AlgebraType, Decomposition, parse_weight

__all__ = [
    "canonical_dumps",
    "rational",
    "decomposition_to_json",
    "parse_decomposition",
]


def canonical_dumps(obj) -> str:
    """Sorted keys, no insignificant whitespace; stable under load/dump round trips."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def rational(x) -> str:
    """Lowest-terms ``p/q`` (or ``p``) with the sign on the numerator."""
    return str(Fraction(x))


def decomposition_to_json(d: Decomposition) -> dict:
    return {
        "algebra": None if d.algebra is None else str(d.algebra),
        "dimension": d.dimension(),
        "terms": [{"weight": w.notation(), "mult": m} for w, m in d.items()],
    }


_TERM = re.compile(r"\s*(?:(\d+)\s*\*\s*)?([\[(][^\[\]()]*[\])])\s*(?:,|$)")


def parse_decomposition(algebra: AlgebraType | str, text: str) -> Decomposition:
    """Parse ``[(1,1,1)]``, ``(2,1,0)`` or ``[(2,1,0), 2*(1,0,0)]``."""
    if isinstance(algebra, str):
        algebra = AlgebraType.parse(algebra)
    s = text.strip()
    if s.startswith("[") and s.endswith("]") and ("(" in s or s.count("[") > 1):
        s = s[1:-1]
    terms: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise NotationError(f"bad decomposition literal {text!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        w = parse_weight(algebra, m.group(2))
        terms[w] = terms.get(w, 0) + mult
        pos = m.end()
    if not terms:
        raise NotationError(f"empty decomposition literal {text!r}")
    return Decomposition(terms, algebra=algebra)
