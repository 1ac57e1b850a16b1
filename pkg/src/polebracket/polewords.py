"""Cyclic pole words and their reduction calculus.

A state curve carries a cyclic word recording, in traversal order, the poles
it passes (each with a side bit) and a flip mark for every orientation
reversing band it runs through.  Pole kinds (sink or source) alternate along
the curve and are therefore not stored; they are recovered from an arbitrary
starting choice when rendering.

Items are small ints: 0 a left-side pole, 1 a right-side pole, 2 a flip
mark.  An adjacent pair of poles (no pole strictly between them on one of
the two cyclic arcs) cancels exactly when their side bits agree after
accounting for the parity of flip marks on that arc; the marks survive the
cancellation.  The index of a curve is half the number of poles left when no
pair cancels.

Words are compared up to rotation, reversal with both side bits swapped,
and sliding a mark past a pole (which toggles that pole's side).  Carrying
one mark all the way around toggles every side, so a global side swap is
available exactly when at least one mark is present.
"""

from __future__ import annotations

import re
from typing import Iterable

L, R, MARK = 0, 1, 2
Word = tuple[int, ...]


def make_word(items: Iterable[int]) -> Word:
    w = tuple(items)
    for x in w:
        if x not in (L, R, MARK):
            raise ValueError(f"bad word item {x!r}")
    return w


def _pole_positions(word: Word) -> list[int]:
    return [i for i, x in enumerate(word) if x != MARK]


def _find_redex(word: Word):
    """Leftmost cancellable adjacent pole pair, as (pos_p, pos_q), or None.
    Pairs are scanned linearly with the wrap-around pair last."""
    ps = _pole_positions(word)
    m = len(ps)
    if m < 2:
        return None
    for k in range(m):
        i = ps[k]
        j = ps[(k + 1) % m]
        if k + 1 < m:
            gap = word[i + 1 : j]
        else:
            gap = word[ps[-1] + 1 :] + word[: ps[0]]
        marks = sum(1 for x in gap if x == MARK) % 2
        if word[i] == word[j] ^ marks:
            return (i, j)
    return None


def _cancel(word: Word, i: int, j: int) -> Word:
    return tuple(x for p, x in enumerate(word) if p != i and p != j)


def reduce(word: Word) -> Word:
    """Cancel adjacent pole pairs until none remains, leftmost redex first."""
    w = make_word(word)
    while True:
        redex = _find_redex(w)
        if redex is None:
            return w
        w = _cancel(w, *redex)


def index(word: Word) -> int:
    """Half the pole count of the reduced word."""
    reduced = reduce(word)
    return sum(1 for x in reduced if x != MARK) // 2


def _redexes(word: Word):
    ps = _pole_positions(word)
    m = len(ps)
    if m < 2:
        return
    for k in range(m):
        i = ps[k]
        j = ps[(k + 1) % m]
        if k + 1 < m:
            gap = word[i + 1 : j]
        else:
            gap = word[ps[-1] + 1 :] + word[: ps[0]]
        marks = sum(1 for x in gap if x == MARK) % 2
        if word[i] == word[j] ^ marks:
            yield (i, j)


def confluence_oracle(word: Word, max_poles: int = 12) -> bool:
    """Explore every reduction order and compare all terminal words up to
    equivalence.  Exponential; guarded by a pole-count bound."""
    w = make_word(word)
    if len(_pole_positions(w)) > max_poles:
        raise ValueError("word too large for exhaustive reduction search")
    memo: dict[Word, frozenset] = {}

    def terminals(u: Word) -> frozenset:
        hit = memo.get(u)
        if hit is not None:
            return hit
        reds = list(_redexes(u))
        if not reds:
            out = frozenset([canonical_key(u)])
        else:
            acc = set()
            for (i, j) in reds:
                acc |= terminals(_cancel(u, i, j))
            out = frozenset(acc)
        memo[u] = out
        return out

    return len(terminals(w)) == 1


# ---------------------------------------------------------------------------
# equivalence


def _sides_and_gaps(word: Word) -> tuple[list[int], list[int], int]:
    """Side bits in order, mark-count parity of the gap before each pole
    (gap 0 wraps), and the total mark count."""
    total = sum(1 for x in word if x == MARK)
    ps = _pole_positions(word)
    sides = [word[i] for i in ps]
    gaps = []
    for k, i in enumerate(ps):
        if k == 0:
            seg = word[ps[-1] + 1 :] + word[:i] if len(ps) > 0 else word
        else:
            seg = word[ps[k - 1] + 1 : i]
        gaps.append(sum(1 for x in seg if x == MARK) % 2)
    return sides, gaps, total


def canonical_key(word: Word):
    """Orbit invariant of a word under rotation, reversal with side swap,
    and mark slides.  Marks are pushed into a single gap; what remains is
    the side string up to rotation, reversal and, when a mark exists, a
    global side toggle, together with the pole count and total mark parity."""
    w = make_word(word)
    sides, gaps, total = _sides_and_gaps(w)
    parity = total % 2
    n = len(sides)
    if n == 0:
        return (0, parity, ())
    rev_sides = [1 - sides[n - 1 - j] for j in range(n)]
    rev_gaps = [gaps[(n - j) % n] for j in range(n)]
    best = None
    for ss, gg in ((sides, gaps), (rev_sides, rev_gaps)):
        for r in range(n):
            s2 = ss[r:] + ss[:r]
            g2 = gg[r:] + gg[:r]
            acc = 0
            pushed = []
            for j in range(n):
                if j > 0:
                    acc ^= g2[j]
                pushed.append(s2[j] ^ acc)
            cands = [tuple(pushed)]
            if total > 0:
                cands.append(tuple(1 - x for x in pushed))
            for c in cands:
                if best is None or c < best:
                    best = c
    return (n, parity, best)


def equivalent(w1: Word, w2: Word) -> bool:
    return canonical_key(w1) == canonical_key(w2)


def rotate(word: Word, r: int) -> Word:
    w = make_word(word)
    if not w:
        return w
    r %= len(w)
    return w[r:] + w[:r]


def reverse_swap(word: Word) -> Word:
    return tuple((1 - x) if x != MARK else MARK for x in reversed(make_word(word)))


def slide_mark(word: Word, i: int) -> Word:
    """Move the mark at position i forward past the next item; passing a
    pole toggles that pole's side."""
    w = make_word(word)
    if w[i] != MARK:
        raise ValueError("no mark at position")
    if len(w) == 1:
        return w
    j = (i + 1) % len(w)
    if w[j] == MARK:
        return w
    out = list(w)
    out[i] = 1 - w[j]
    out[j] = MARK
    return tuple(out)


def random_equivalent(word: Word, rng, steps: int = 12) -> Word:
    """A word in the same equivalence class, reached by random legal moves."""
    w = make_word(word)
    for _ in range(steps):
        choice = rng.randrange(3)
        if choice == 0 and w:
            w = rotate(w, rng.randrange(len(w)))
        elif choice == 1:
            w = reverse_swap(w)
        else:
            marks = [i for i, x in enumerate(w) if x == MARK]
            if marks:
                w = slide_mark(w, rng.choice(marks))
    return w


# ---------------------------------------------------------------------------
# rendering

_ITEM_RE = re.compile(r"\((I|O):(L|R)\)|\|f\|")


def render(word: Word, start_kind: str = "I") -> str:
    """Debug text like (I:L)(O:R)|f|; kinds alternate from start_kind."""
    w = make_word(word)
    kind = start_kind
    out = []
    for x in w:
        if x == MARK:
            out.append("|f|")
        else:
            out.append(f"({kind}:{'L' if x == L else 'R'})")
            kind = "O" if kind == "I" else "I"
    return "".join(out)


def parse_word(text: str) -> Word:
    items: list[int] = []
    kinds: list[str] = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _ITEM_RE.match(stripped, pos)
        if not m:
            raise ValueError(f"bad pole word at offset {pos}: {stripped[pos:]!r}")
        if m.group(0) == "|f|":
            items.append(MARK)
        else:
            kinds.append(m.group(1))
            items.append(L if m.group(2) == "L" else R)
        pos = m.end()
    for a, b in zip(kinds, kinds[1:]):
        if a == b:
            raise ValueError("pole kinds must alternate")
    if len(kinds) >= 2 and len(kinds) % 2 == 1:
        raise ValueError("cyclic pole word needs an even pole count")
    return tuple(items)
