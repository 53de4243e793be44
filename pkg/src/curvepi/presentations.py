"""Finite presentations, substitution homomorphisms, printing and JSON forms."""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .words import Word, cyclic_reduce_word


class Presentation:
    """Generators (ordered names) and relators (cyclically reduced words).

    Relators that reduce to the empty word are dropped; the conjugating part
    of a non-cyclically-reduced relator is discarded (same normal closure).
    """

    __slots__ = ("generators", "relators")

    def __init__(self, generators: Sequence[str], relators: Iterable[Word] = ()):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        rels = []
        for w in relators:
            if not isinstance(w, Word):
                raise TypeError("relators must be Word values")
            if w.max_generator() >= len(gens):
                raise ValueError(f"relator {w!r} uses an undeclared generator")
            w = cyclic_reduce_word(w)
            if w:
                rels.append(w)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    @property
    def n_gens(self) -> int:
        return len(self.generators)

    def gen_index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def word(self, pairs: Sequence[Tuple[str, int]]) -> Word:
        """Word from (name, exponent) pairs; exponents may be any int."""
        letters: list[int] = []
        for name, e in pairs:
            g = self.gen_index(name) + 1
            letters.extend([g if e > 0 else -g] * abs(e))
        return Word(letters)

    def check_word(self, w: Word) -> Word:
        if w.max_generator() >= self.n_gens:
            raise ValueError(f"word {w!r} uses an undeclared generator")
        return w

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relators == other.relators
        )

    def __hash__(self) -> int:
        return hash((self.generators, self.relators))

    def __repr__(self) -> str:
        return f"Presentation({format_presentation(self)!r})"

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [
                [[self.generators[g], s] for g, s in w.pairs()] for w in self.relators
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        gens = list(data["generators"])
        rels = []
        for rel in data["relators"]:
            rels.append(Word((1 if s > 0 else -1) * (gens.index(name) + 1) for name, s in rel))
        return cls(gens, rels)


class SubstitutionMap:
    """A candidate homomorphism: one image word per source generator."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Presentation, target: Presentation, images: Sequence[Word]):
        if len(images) != source.n_gens:
            raise ValueError("need exactly one image per source generator")
        for w in images:
            target.check_word(w)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", tuple(images))

    def __setattr__(self, name, value):
        raise AttributeError("SubstitutionMap is immutable")

    def image_of_generator(self, index: int) -> Word:
        return self.images[index]

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{g} -> {format_word(self.target, w)}"
            for g, w in zip(self.source.generators, self.images)
        )
        return f"SubstitutionMap({parts})"


def substitute(m: SubstitutionMap, w: Word) -> Word:
    """Apply the substitution letterwise and freely reduce."""
    m.source.check_word(w)
    out = Word()
    for x in w.letters:
        img = m.images[abs(x) - 1]
        out = out * (img if x > 0 else ~img)
    return out


def compose(outer: SubstitutionMap, inner: SubstitutionMap) -> SubstitutionMap:
    """outer o inner, defined when inner.target == outer.source."""
    if inner.target is not outer.source and inner.target != outer.source:
        raise ValueError("maps are not composable")
    return SubstitutionMap(
        inner.source, outer.target, [substitute(outer, w) for w in inner.images]
    )


def identity_map(p: Presentation) -> SubstitutionMap:
    return SubstitutionMap(p, p, [Word.gen(i) for i in range(p.n_gens)])


def format_word(p: Presentation, w: Word) -> str:
    """Render a word in the DSL grammar (powers collapsed, space separated)."""
    if not w:
        raise ValueError("the empty word has no DSL form")
    atoms = []
    run_letter, run_len = w.letters[0], 1
    for x in w.letters[1:]:
        if x == run_letter:
            run_len += 1
        else:
            atoms.append(_format_run(p, run_letter, run_len))
            run_letter, run_len = x, 1
    atoms.append(_format_run(p, run_letter, run_len))
    return " ".join(atoms)


def _format_run(p: Presentation, letter: int, count: int) -> str:
    name = p.generators[abs(letter) - 1]
    e = count if letter > 0 else -count
    return name if e == 1 else f"{name}^{e}"


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(p, w) for w in p.relators)
    return f"< {gens} | {rels} >"
