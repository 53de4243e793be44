"""Bounded search for derivations: prove a word trivial in a presented group
by exhibiting a replayable chain of elementary steps.

A step is either

    ("insert", relator_index, inverted, position)  -- splice the relator (or
        its inverse) into the current word at the position, then freely
        reduce, or
    ("rotate", k)  -- cyclic permutation moving the first k letters to the
        end, then freely reduce (sound for triviality: conjugation).

The search is best-first on (word length, steps taken) over canonical
cyclic forms, with relator insertions attempted at every position of the
canonical representative; cyclic permutations are folded into the state
space by canonicalizing after every insertion.
"""

from __future__ import annotations

import heapq
from typing import Dict, List, Optional, Sequence, Tuple

from .presentations import Presentation
from .words import (
    Word,
    canonical_cyclic,
    invert,
    least_rotation,
    reduce_letters,
    splice,
)

Step = Tuple


class DerivationBudget:
    """Limits for derivation searches; all positive."""

    __slots__ = ("max_insertions", "max_word_length", "max_states")

    def __init__(
        self,
        max_insertions: int = 64,
        max_word_length: int = 64,
        max_states: int = 100_000,
    ):
        if min(max_insertions, max_word_length, max_states) < 1:
            raise ValueError("budget fields must be positive")
        self.max_insertions = max_insertions
        self.max_word_length = max_word_length
        self.max_states = max_states

    def __repr__(self) -> str:
        return (
            f"DerivationBudget(max_insertions={self.max_insertions}, "
            f"max_word_length={self.max_word_length}, max_states={self.max_states})"
        )


class ProofTrace:
    """A replayable derivation of the empty word from ``start``."""

    __slots__ = ("start", "steps")

    def __init__(self, start: Word, steps: Sequence[Step]):
        self.start = start
        self.steps = tuple(steps)

    @property
    def insertions(self) -> int:
        return sum(1 for s in self.steps if s[0] == "insert")

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"ProofTrace(start={self.start!r}, steps={len(self.steps)})"


class Inconclusive:
    """Budget exhausted before a derivation was found; not a judgment."""

    __slots__ = ("reason",)

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self) -> str:
        return f"Inconclusive({self.reason!r})"


def replay_trace(p: Presentation, trace: ProofTrace) -> bool:
    """Independent step checker: replays the trace and demands it end at the
    empty word.  Uses only free reduction, splicing and rotation."""
    current = trace.start.letters
    for step in trace.steps:
        if step[0] == "insert":
            _, idx, inv, pos = step
            if not 0 <= idx < len(p.relators):
                return False
            rel = p.relators[idx].letters
            if inv:
                rel = invert(rel)
            if not 0 <= pos <= len(current):
                return False
            current = splice(current, pos, rel)
        elif step[0] == "rotate":
            _, k = step
            if current:
                k %= len(current)
                current = reduce_letters(current[k:] + current[:k])
        else:
            return False
    return not current


def _canonical_steps(letters: Tuple[int, ...]) -> Tuple[Tuple[int, ...], List[Step]]:
    """Canonicalize and record the rotations used, for trace replay."""
    steps: List[Step] = []
    cur = reduce_letters(letters)
    while len(cur) >= 2 and cur[0] == -cur[-1]:
        cur = reduce_letters(cur[1:] + cur[:1])
        steps.append(("rotate", 1))
    if len(cur) > 1:
        k = least_rotation(cur)
        if k:
            cur = cur[k:] + cur[:k]
            steps.append(("rotate", k))
    return cur, steps


def derive_relator(
    p: Presentation, w: Word, budget: DerivationBudget | None = None
) -> ProofTrace | Inconclusive:
    """Search for a derivation of ``w == 1`` in the presented group.

    Returns a ProofTrace that replay_trace accepts, or Inconclusive when the
    budget is exhausted (never a refutation: use abelianization or finite
    quotients to refute)."""
    budget = budget or DerivationBudget()
    p.check_word(w)
    start = canonical_cyclic(w.letters)
    if not start:
        _, steps = _canonical_steps(w.letters)
        return ProofTrace(w, steps)
    if not p.relators:
        return Inconclusive("no relators to insert")

    inserts: List[Tuple[int, bool, Tuple[int, ...]]] = []
    for idx, rel in enumerate(p.relators):
        inserts.append((idx, False, rel.letters))
        inv = invert(rel.letters)
        if inv != rel.letters:
            inserts.append((idx, True, inv))

    # state -> (parent, (relator_index, inverted, position))
    parents: Dict[Tuple[int, ...], Optional[Tuple[Tuple[int, ...], Tuple[int, bool, int]]]] = {
        start: None
    }
    depth: Dict[Tuple[int, ...], int] = {start: 0}
    counter = 0
    heap: List[Tuple[int, int, int, Tuple[int, ...]]] = [(len(start), 0, counter, start)]
    found = False
    while heap:
        length, d, _, state = heapq.heappop(heap)
        if d != depth.get(state):
            continue
        if d >= budget.max_insertions:
            continue
        for idx, inv, rel in inserts:
            for pos in range(len(state) + 1):
                child = splice(state, pos, rel)
                if len(child) > budget.max_word_length:
                    continue
                canon = canonical_cyclic(child)
                if canon in parents:
                    continue
                parents[canon] = (state, (idx, inv, pos))
                depth[canon] = d + 1
                if not canon:
                    found = True
                    break
                if len(parents) >= budget.max_states:
                    return Inconclusive(
                        f"state budget exhausted ({budget.max_states} states)"
                    )
                counter += 1
                heapq.heappush(heap, (len(canon), d + 1, counter, canon))
            if found:
                break
        if found:
            break
    if not found:
        return Inconclusive("search space exhausted within budget")

    # walk parents back from the empty state, then rebuild concrete steps
    chain: List[Tuple[Tuple[int, ...], Tuple[int, bool, int]]] = []
    node: Tuple[int, ...] = ()
    while parents[node] is not None:
        parent, op = parents[node]  # type: ignore[misc]
        chain.append((parent, op))
        node = parent
    chain.reverse()

    steps: List[Step] = []
    cur, pre = _canonical_steps(w.letters)
    steps.extend(pre)
    for state, (idx, inv, pos) in chain:
        assert cur == state, "trace reconstruction out of sync"
        rel = p.relators[idx].letters
        if inv:
            rel = invert(rel)
        raw = splice(cur, pos, rel)
        steps.append(("insert", idx, inv, pos))
        cur, extra = _canonical_steps(raw)
        steps.extend(extra)
    assert cur == ()
    trace = ProofTrace(w, steps)
    assert replay_trace(p, trace), "derived trace failed replay"
    return trace
