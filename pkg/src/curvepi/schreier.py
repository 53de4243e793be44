"""Schreier transversals, Reidemeister-Schreier rewriting, subgroup
presentations, and Tietze simplification."""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from .coset_table import CosetTable
from .presentations import Presentation
from .words import (
    Word,
    canonical_cyclic,
    cyclic_reduce,
    invert,
    reduce_letters,
)


class Transversal:
    """Prefix-closed coset representatives, index-aligned with the table.
    Representative 0 is the empty word."""

    __slots__ = ("representatives",)

    def __init__(self, representatives: Sequence[Word]):
        self.representatives = tuple(representatives)

    def __len__(self) -> int:
        return len(self.representatives)

    def __getitem__(self, i: int) -> Word:
        return self.representatives[i]


def schreier_transversal(t: CosetTable) -> Transversal:
    """BFS-minimal transversal over positive generators in declaration
    order.  Positive letters suffice: each generator permutes the finite
    coset set, so the set reachable by positive steps is inverse-closed."""
    reps: List[Optional[Word]] = [None] * t.n
    reps[0] = Word()
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for g in range(t.n_gens):
            d = t.forward[g][c]
            if reps[d] is None:
                reps[d] = reps[c] * Word.gen(g)
                queue.append(d)
    assert all(r is not None for r in reps), "table is not transitive"
    return Transversal(reps)  # type: ignore[arg-type]


class SchreierGenerator:
    """s_{K,a} = (rep K) a (rep Ka)^-1, an element of the subgroup."""

    __slots__ = ("coset", "gen", "value")

    def __init__(self, coset: int, gen: int, value: Word):
        self.coset = coset
        self.gen = gen
        self.value = value

    def __repr__(self) -> str:
        return f"SchreierGenerator(coset={self.coset}, gen={self.gen})"


class SchreierRewriter:
    """Rewriting machinery for the subgroup at coset 0 of a coset table.

    Schreier generators with freely trivial value (the BFS tree edges) are
    dropped up front, so rewritten words use only the essential generators.
    """

    def __init__(self, p: Presentation, t: CosetTable, transversal: Transversal | None = None):
        self.presentation = p
        self.table = t
        self.transversal = transversal or schreier_transversal(t)
        self.generators: List[SchreierGenerator] = []
        self.names: List[str] = []
        # (coset, gen) -> subgroup generator index, or None when trivial
        self.index: Dict[Tuple[int, int], Optional[int]] = {}
        for coset in range(t.n):
            rep = self.transversal[coset]
            for g in range(t.n_gens):
                target = t.forward[g][coset]
                value = rep * Word.gen(g) * ~self.transversal[target]
                if value:
                    self.index[(coset, g)] = len(self.generators)
                    self.generators.append(SchreierGenerator(coset, g, value))
                    self.names.append(f"s{coset}_{p.generators[g]}")
                else:
                    self.index[(coset, g)] = None

    def rewrite(self, w: Word) -> Word:
        """The rewriting function: a word in the ambient generators that
        lies in the subgroup becomes a word in the Schreier generators."""
        self.presentation.check_word(w)
        if self.table.trace(0, w) != 0:
            raise ValueError("word does not lie in the subgroup (leaves coset 0)")
        letters: List[int] = []
        coset = 0
        for x in w.letters:
            g = abs(x) - 1
            if x > 0:
                idx = self.index[(coset, g)]
                coset = self.table.forward[g][coset]
                if idx is not None:
                    letters.append(idx + 1)
            else:
                coset = self.table.backward[g][coset]
                idx = self.index[(coset, g)]
                if idx is not None:
                    letters.append(-(idx + 1))
        return Word(letters)

    def subgroup_presentation(self) -> Presentation:
        """Generators: the nontrivial s_{K,a}; relators: each ambient
        relator conjugated by each representative and rewritten."""
        rels: List[Word] = []
        for coset in range(self.table.n):
            rep = self.transversal[coset]
            for r in self.presentation.relators:
                rels.append(self.rewrite(rep * r * ~rep))
        return Presentation(self.names, rels)


def rewrite(p: Presentation, t: CosetTable, w: Word, transversal: Transversal | None = None) -> Word:
    return SchreierRewriter(p, t, transversal).rewrite(w)


def subgroup_presentation(p: Presentation, t: CosetTable) -> Presentation:
    return SchreierRewriter(p, t).subgroup_presentation()


# ---------------------------------------------------------------------------
# Tietze simplification


def _dedupe_key(letters: Tuple[int, ...]) -> Tuple[int, ...]:
    return min(canonical_cyclic(letters), canonical_cyclic(invert(letters)))


def _substring_shorten(rel: Tuple[int, ...], shorter: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """Replace a cyclic substring of ``rel`` that covers more than half of a
    rotation of ``shorter`` (or its inverse) with the inverse of the rest.
    Returns the strictly shorter replacement, or None."""
    n, m = len(rel), len(shorter)
    if n < 2 or m < 2 or n < m // 2 + 1:
        return None
    doubled = rel + rel
    for unit in (shorter, invert(shorter)):
        for k in range(m):
            rot = unit[k:] + unit[:k]
            for split in range(m // 2 + 1, min(m, n + 1)):
                s, rest = rot[:split], rot[split:]
                # find s as a substring of the cyclic word
                for start in range(n):
                    if doubled[start : start + split] == s:
                        tail = doubled[start + split : start + n]
                        candidate = reduce_letters(tail + invert(rest))
                        if len(candidate) < n:
                            return candidate
    return None


def simplify(
    p: Presentation,
    max_passes: int = 1000,
    growth_limit: int = 4,
    substring_max_relators: int = 64,
    substring_max_length: int = 2048,
) -> Presentation:
    """Tietze simplification.

    - drops empty and duplicate relators (duplicates modulo rotation and
      inversion),
    - eliminates generators that occur exactly once in some relator,
      preferring the shortest defining relator then the lowest generator
      index, refusing eliminations that would push the total relator length
      beyond ``growth_limit`` times the input,
    - shortens relators against rotations of shorter relators (skipped on
      presentations too large for the quadratic scan to be worthwhile).

    Deterministic, and the abelianization is invariant under the pipeline.
    """
    names = list(p.generators)
    rels: List[Tuple[int, ...]] = [w.letters for w in p.relators]
    budget_total = growth_limit * max(1, sum(len(r) for r in rels))

    def dedupe() -> None:
        nonlocal rels
        seen = set()
        out = []
        for r in rels:
            r = cyclic_reduce(reduce_letters(r))
            if not r:
                continue
            key = _dedupe_key(r)
            if key in seen:
                continue
            seen.add(key)
            out.append(r)
        rels = out

    def eliminate_once() -> bool:
        """One generator elimination; True if performed."""
        # candidate: generator occurring exactly once (counting signs) in
        # some relator; rank by (len(relator), gen index, relator index)
        best = None
        for ri, r in enumerate(rels):
            counts: Dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for g, c in counts.items():
                if c == 1:
                    key = (len(r), g, ri)
                    if best is None or key < best:
                        best = key
        if best is None:
            return False
        rlen, g, ri = best
        r = rels[ri]
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        # rotate the occurrence to the front: r ~ g^e . tail, so g^e = tail^-1
        rot = r[pos:] + r[:pos]
        e = 1 if rot[0] > 0 else -1
        tail = rot[1:]
        replacement = invert(tail) if e > 0 else tail  # word equal to g
        new_rels = []
        total = 0
        for i, w in enumerate(rels):
            if i == ri:
                continue
            out: List[int] = []
            for x in w:
                if abs(x) == g:
                    out.extend(replacement if x > 0 else invert(replacement))
                else:
                    out.append(x)
            reduced = cyclic_reduce(reduce_letters(tuple(out)))
            if reduced:
                new_rels.append(reduced)
                total += len(reduced)
        if total > budget_total:
            return False
        # drop the generator, shifting letters above it down
        def shift(w: Tuple[int, ...]) -> Tuple[int, ...]:
            return tuple(x - 1 if x > g else (x + 1 if x < -g else x) for x in w)

        rels[:] = [shift(w) for w in new_rels]
        del names[g - 1]
        return True

    def shorten_once() -> bool:
        if len(rels) > substring_max_relators:
            return False
        if sum(len(r) for r in rels) > substring_max_length:
            return False
        order = sorted(range(len(rels)), key=lambda i: (len(rels[i]), i))
        for wi in reversed(order):  # longest first
            for ui in order:
                if ui == wi or len(rels[ui]) > len(rels[wi]):
                    continue
                out = _substring_shorten(rels[wi], rels[ui])
                if out is not None:
                    rels[wi] = cyclic_reduce(out)
                    return True
        return False

    dedupe()
    for _ in range(max_passes):
        if eliminate_once():
            dedupe()
            continue
        if shorten_once():
            dedupe()
            continue
        break
    return Presentation(names, [Word(r) for r in rels])
