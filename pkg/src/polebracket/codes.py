"""Twisted Gauss codes: parsing, validation, canonical forms, random diagrams.

A twisted link diagram is stored as a list of components, each a cyclic
sequence of tokens.  A token is either a crossing visit (O or U, a positive
crossing id, and the crossing sign) or a bar B marking a half-twist on the
arc.  Virtual crossings are deliberately not represented: the surface
realization attaches nothing at them, so a signed Gauss code with bars
already determines the twisted link, and the virtual moves plus T2 hold by
construction.

Text format (.tgc): one component per line, whitespace-separated tokens
O<id><sign> / U<id><sign> / B, sign in {+,-}; '#' starts a comment; a
component with no tokens at all is written as the single token EMPTY.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union


class CodeError(ValueError):
    """Raised for malformed .tgc text or invalid token structure."""


@dataclass(frozen=True)
class Visit:
    crossing: int
    over: bool
    sign: int  # +1 or -1

    def __repr__(self) -> str:
        return token_text(self)


@dataclass(frozen=True)
class Bar:
    def __repr__(self) -> str:
        return "B"


BAR = Bar()

Token = Union[Visit, Bar]


def token_text(tok: Token) -> str:
    if isinstance(tok, Bar):
        return "B"
    return f"{'O' if tok.over else 'U'}{tok.crossing}{'+' if tok.sign > 0 else '-'}"


@dataclass(frozen=True)
class TwistedGaussCode:
    components: tuple[tuple[Token, ...], ...]

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        seen = set()
        for comp in self.components:
            for tok in comp:
                if isinstance(tok, Visit):
                    seen.add(tok.crossing)
        return tuple(sorted(seen))

    @property
    def crossings(self) -> int:
        return len(self.crossing_ids)

    @property
    def bars(self) -> int:
        return sum(1 for comp in self.components for t in comp if isinstance(t, Bar))

    def sign_of(self, crossing_id: int) -> int:
        for comp in self.components:
            for tok in comp:
                if isinstance(tok, Visit) and tok.crossing == crossing_id:
                    return tok.sign
        raise KeyError(crossing_id)

    def __repr__(self) -> str:
        return f"TwistedGaussCode<{serialize(self).replace(chr(10), ' / ').strip()}>"


def _validate(components: Sequence[Sequence[Token]]) -> None:
    seen: dict[int, list[Visit]] = {}
    for ci, comp in enumerate(components):
        for tok in comp:
            if isinstance(tok, Visit):
                if tok.crossing < 1:
                    raise CodeError(f"component {ci + 1}: crossing id must be >= 1")
                if tok.sign not in (1, -1):
                    raise CodeError(f"component {ci + 1}: sign must be +1 or -1")
                seen.setdefault(tok.crossing, []).append(tok)
    for cid, visits in sorted(seen.items()):
        if len(visits) != 2:
            raise CodeError(
                f"crossing {cid} visited {len(visits)} time(s); need exactly one O and one U"
            )
        a, b = visits
        if a.over == b.over:
            role = "O" if a.over else "U"
            raise CodeError(f"crossing {cid} has two {role} visits; need one O and one U")
        if a.sign != b.sign:
            raise CodeError(f"crossing {cid} has mismatched signs on its two visits")


def make_code(components: Iterable[Iterable[Token]]) -> TwistedGaussCode:
    comps = tuple(tuple(c) for c in components)
    _validate(comps)
    return TwistedGaussCode(comps)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_VISIT_RE = re.compile(r"^([OU])([0-9]+)([+-])$")


def parse_code(text: str) -> TwistedGaussCode:
    """Parse .tgc text into a validated code.

    Errors carry the 1-based component index and token offset.
    """
    components: list[tuple[Token, ...]] = []
    comp_no = 0
    for raw_line in text.replace("−", "-").splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        comp_no += 1
        words = line.split()
        if "EMPTY" in words:
            if len(words) != 1:
                raise CodeError(
                    f"component {comp_no}: EMPTY must be the only token on its line"
                )
            components.append(())
            continue
        toks: list[Token] = []
        for off, w in enumerate(words):
            if w == "B":
                toks.append(BAR)
                continue
            m = _VISIT_RE.match(w)
            if not m:
                raise CodeError(
                    f"component {comp_no}, token {off + 1}: bad token {w!r}"
                )
            toks.append(
                Visit(
                    crossing=int(m.group(2)),
                    over=m.group(1) == "O",
                    sign=1 if m.group(3) == "+" else -1,
                )
            )
        components.append(tuple(toks))
    comps = tuple(components)
    _validate(comps)
    return TwistedGaussCode(comps)


def serialize(code: TwistedGaussCode) -> str:
    """Emit .tgc text; literal inverse of parse_code (round-trips exactly)."""
    lines = []
    for comp in code.components:
        lines.append(" ".join(token_text(t) for t in comp) if comp else "EMPTY")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


def _candidate_key(comps: Sequence[Sequence[Token]]):
    # relabel crossings by first appearance; tokens become comparable tuples
    relabel: dict[int, int] = {}
    key = []
    for comp in comps:
        ck = []
        for tok in comp:
            if isinstance(tok, Bar):
                ck.append((0, 0, 0, 0))
            else:
                if tok.crossing not in relabel:
                    relabel[tok.crossing] = len(relabel) + 1
                ck.append(
                    (1, relabel[tok.crossing], 0 if tok.over else 1, 0 if tok.sign > 0 else 1)
                )
        ck.append(tuple())  # component terminator so prefixes never tie with extensions
        key.append(tuple(ck))
    return tuple(key), relabel


def canonicalize(code: TwistedGaussCode) -> TwistedGaussCode:
    """Deterministic representative under component reordering, per-component
    rotation, and crossing renumbering.  Idempotent; constant on orbits.

    The search is exhaustive over component orders and rotation offsets,
    which is fine at desk scale (token counts here are tens, not thousands).
    """
    comps = code.components
    if not comps:
        return code
    best_key = None
    best = None
    rot_ranges = [range(max(1, len(c))) for c in comps]
    for perm in itertools.permutations(range(len(comps))):
        for offs in itertools.product(*(rot_ranges[i] for i in perm)):
            cand = []
            for i, off in zip(perm, offs):
                comp = comps[i]
                cand.append(comp[off:] + comp[:off])
            key, relabel = _candidate_key(cand)
            if best_key is None or key < best_key:
                best_key = key
                best = (cand, relabel)
    assert best is not None
    cand, relabel = best
    newcomps = tuple(
        tuple(
            t if isinstance(t, Bar) else Visit(relabel[t.crossing], t.over, t.sign)
            for t in comp
        )
        for comp in cand
    )
    return TwistedGaussCode(newcomps)


def writhe(code: TwistedGaussCode) -> int:
    """Sum of crossing signs, each crossing counted once."""
    return sum(
        tok.sign
        for comp in code.components
        for tok in comp
        if isinstance(tok, Visit) and tok.over
    )


# ---------------------------------------------------------------------------
# random diagrams for the verification corpus
# ---------------------------------------------------------------------------


def random_diagram(
    seed: int, crossings: int, bars: int, components: int = 1
) -> TwistedGaussCode:
    """Deterministic pseudo-random valid code with the requested counts.

    Validity, not any particular value, is the contract.  Raises on
    infeasible parameter combinations (components exceeding the available
    strand supply 2*crossings + bars, except that a single bare loop is
    always allowed).
    """
    if crossings < 0 or bars < 0:
        raise ValueError("crossings and bars must be >= 0")
    if components < 1:
        raise ValueError("components must be >= 1")
    if components > max(1, 2 * crossings + bars):
        raise ValueError("components exceeding available strands")
    rng = random.Random(seed)
    visits: list[Token] = []
    for cid in range(1, crossings + 1):
        sign = rng.choice((1, -1))
        visits.append(Visit(cid, True, sign))
        visits.append(Visit(cid, False, sign))
    rng.shuffle(visits)
    comps: list[list[Token]] = [[] for _ in range(components)]
    # deal one visit to each component first so none is accidentally bare
    for i, tok in enumerate(visits):
        if i < components:
            comps[i].append(tok)
        else:
            comps[rng.randrange(components)].append(tok)
    for _ in range(bars):
        c = comps[rng.randrange(components)]
        c.insert(rng.randrange(len(c) + 1), BAR)
    return make_code(comps)
