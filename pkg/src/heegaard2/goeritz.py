"""Presentations of the genus-two Goeritz groups of connected sums, the
stabilizer subgroups they are assembled from, and confluent rewriting
systems solving their word problems.

The three cases are:

* ``1a`` lens # lens, not symmetric:
  < a, b, g1, g2 | a^2, g1^2, g2^2 > with a central;
* ``1b`` lens # lens, symmetric:
  < a, b, g1, d | a^2, g1^2, d^2, d b d = a b > with a central;
* ``2``  an S^2 x S^1 summand:
  < a, b, g, s, t | a^2, g^2, s^2 > with a and t central.

Generator tokens are shell-safe ASCII (a, b, g, g1, g2, d, s, t); a
trailing apostrophe marks an inverse, so "d b d" is the word d*b*d and
"b'" is the inverse of b.  Words are tuples of tokens; the empty word
prints as "1".

Normal forms push the central letters to the front, kill involution
squares and free cancellations, and (in case 1b) move d past b at the
cost of an a.  The rule sets terminate (each rule lowers the measure
returned by :func:`termination_measure`) and are locally confluent
(:func:`check_local_confluence` returns no critical pairs), so normal
forms are unique and word equality is decidable.
"""

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

Word = tuple[str, ...]

CASES = ("1a", "1b", "2")

_ALPHABETS = {
    "1a": ("a", "b", "g1", "g2"),
    "1b": ("a", "b", "g1", "d"),
    "2": ("a", "b", "g", "s", "t"),
}

# generators of order two; b and t have infinite order
_INVOLUTIONS = frozenset({"a", "g", "g1", "g2", "d", "s"})


def _base(token: str) -> str:
    return token[:-1] if token.endswith("'") else token


def invert_word(word: Word) -> Word:
    """Formal inverse: reverse and toggle the apostrophe on each token."""
    return tuple(
        tok[:-1] if tok.endswith("'") else tok + "'" for tok in reversed(word)
    )


def parse_tokens(text: str, case: str | None = None) -> Word:
    """Parse a whitespace-separated token word; "1" is the empty word.
    With ``case`` given, tokens are checked against that alphabet."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    word = tuple(text.split())
    if case is not None:
        _check_alphabet(word, case)
    return word


def format_tokens(word: Word) -> str:
    return " ".join(word) if word else "1"


def _check_alphabet(word: Word, case: str) -> None:
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    allowed = set(_ALPHABETS[case])
    for tok in word:
        if _base(tok) not in allowed or tok.count("'") > 1:
            raise ValueError(
                f"token {tok!r} is not over the case-{case} alphabet "
                f"{_ALPHABETS[case]}"
            )


@dataclass(frozen=True)
class Presentation:
    """Generators, relator words and the generators marked central."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    central: tuple[str, ...] = ()

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            for tok in r:
                if _base(tok) not in gens:
                    raise ValueError(f"relator token {tok!r} uses no declared generator")
        for g in self.central:
            if g not in gens:
                raise ValueError(f"central generator {g!r} is not declared")


def _collapse_runs(word: Word) -> str:
    parts: list[str] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return " ".join(parts)


def presentation_text(p: Presentation) -> str:
    rel = ", ".join(_collapse_runs(r) for r in p.relators)
    text = f"< {', '.join(p.generators)} | {rel} >"
    if p.central:
        text += f"  central: {', '.join(p.central)}"
    return text


def presentation_json(p: Presentation) -> dict:
    return {
        "generators": list(p.generators),
        "relators": [list(r) for r in p.relators],
        "central": list(p.central),
    }


_GOERITZ = {
    "1a": Presentation(
        ("a", "b", "g1", "g2"),
        (("a", "a"), ("g1", "g1"), ("g2", "g2")),
        ("a",),
    ),
    "1b": Presentation(
        ("a", "b", "g1", "d"),
        (("a", "a"), ("g1", "g1"), ("d", "d"), ("d", "b", "d", "b'", "a'")),
        ("a",),
    ),
    "2": Presentation(
        ("a", "b", "g", "s", "t"),
        (("a", "a"), ("g", "g"), ("s", "s")),
        ("a", "t"),
    ),
}


def goeritz_presentation(case: str) -> Presentation:
    """The Goeritz-group presentation for the given case."""
    if case not in _GOERITZ:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    return _GOERITZ[case]


STABILIZERS = (
    "disk_sphere",  # one disk and one sphere
    "disk_sphere_sphere",  # one disk and an ordered sphere pair
    "disk_sphere_pair",  # one disk and an unordered sphere pair
    "disk",  # one disk
    "disk_disk",  # an ordered disk pair
    "disk_pair",  # an unordered disk pair
)


def stabilizer_presentation(which: str, case: str) -> Presentation:
    """Presentation of a stabilizer subgroup of the Goeritz group.

    ``which`` names what is stabilized (see :data:`STABILIZERS`); the
    case determines whether the central twist t is present and whether
    the unordered disk pair carries the half-twist relation d b d = a b.
    """
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    if case in ("1a", "1b"):
        table = {
            "disk_sphere": Presentation(("a", "b"), (("a", "a"),), ("a",)),
            "disk_sphere_sphere": Presentation(("a",), (("a", "a"),), ("a",)),
            "disk_sphere_pair": Presentation(
                ("a", "g1"), (("a", "a"), ("g1", "g1")), ("a",)
            ),
            "disk": Presentation(
                ("a", "b", "g1"), (("a", "a"), ("g1", "g1")), ("a",)
            ),
            "disk_disk": Presentation(("a", "b"), (("a", "a"),), ("a",)),
        }
        if case == "1a":
            table["disk_pair"] = Presentation(("a", "b"), (("a", "a"),), ("a",))
        else:
            table["disk_pair"] = Presentation(
                ("a", "b", "d"),
                (("a", "a"), ("d", "d"), ("d", "b", "d", "b'", "a'")),
                ("a",),
            )
    else:
        table = {
            "disk_sphere": Presentation(("a", "b", "t"), (("a", "a"),), ("a", "t")),
            "disk_sphere_sphere": Presentation(("a", "t"), (("a", "a"),), ("a", "t")),
            "disk_sphere_pair": Presentation(
                ("a", "g", "t"), (("a", "a"), ("g", "g")), ("a", "t")
            ),
            "disk": Presentation(
                ("a", "b", "g", "t"), (("a", "a"), ("g", "g")), ("a", "t")
            ),
            "disk_disk": Presentation(("a", "t"), (("a", "a"),), ("a", "t")),
            "disk_pair": Presentation(
                ("a", "s", "t"), (("a", "a"), ("s", "s")), ("a", "t")
            ),
        }
    if which not in table:
        raise ValueError(
            f"unknown stabilizer {which!r}; expected one of {STABILIZERS}"
        )
    return table[which]


def rename_generators(p: Presentation, mapping: Mapping[str, str]) -> Presentation:
    """Presentation with generators renamed through ``mapping``."""

    def ren(tok: str) -> str:
        b = _base(tok)
        out = mapping.get(b, b)
        return out + "'" if tok.endswith("'") else out

    return Presentation(
        tuple(mapping.get(g, g) for g in p.generators),
        tuple(tuple(ren(t) for t in r) for r in p.relators),
        tuple(mapping.get(g, g) for g in p.central),
    )


@dataclass(frozen=True)
class AmalgamData:
    """Two vertex groups, an edge group and its two embeddings, given as
    generator images (words in the target generators)."""

    vertex_a: Presentation
    vertex_b: Presentation
    edge: Presentation
    embed_a: Mapping[str, Word]
    embed_b: Mapping[str, Word]

    def __post_init__(self):
        for name, emb, target in (
            ("embed_a", self.embed_a, self.vertex_a),
            ("embed_b", self.embed_b, self.vertex_b),
        ):
            if set(emb) != set(self.edge.generators):
                raise ValueError(f"{name} must be defined on the edge generators")
            gens = set(target.generators)
            for c, img in emb.items():
                for tok in img:
                    if _base(tok) not in gens:
                        raise ValueError(
                            f"{name}[{c!r}] uses {tok!r}, not a target generator"
                        )
        object.__setattr__(self, "embed_a", MappingProxyType(dict(self.embed_a)))
        object.__setattr__(self, "embed_b", MappingProxyType(dict(self.embed_b)))


def _free_cancel(word: Word) -> Word:
    out: list[str] = []
    for tok in word:
        if out and (out[-1] == tok + "'" or tok == out[-1] + "'"):
            out.pop()
        else:
            out.append(tok)
    return tuple(out)


def amalgam_assemble(data: AmalgamData) -> Presentation:
    """Presentation of the amalgamated free product: union of generators
    (shared names identified) and relators, plus a relator equating the
    two images of each edge generator.  Trivial identification relators
    are dropped and duplicate relators deduplicated, which is exactly the
    cleanup needed to reproduce the Goeritz presentations."""
    a, b = data.vertex_a, data.vertex_b
    shared = [g for g in a.generators if g in b.generators]
    for g in shared:
        carried = any(
            data.embed_a[c] == (g,) and data.embed_b[c] == (g,)
            for c in data.edge.generators
        )
        if not carried:
            raise ValueError(
                f"inconsistent shared generator {g!r}: not carried by the edge group"
            )
    generators = tuple(a.generators) + tuple(
        g for g in b.generators if g not in a.generators
    )
    relators: list[Word] = []
    for r in a.relators + b.relators:
        if r not in relators:
            relators.append(r)
    for c in data.edge.generators:
        rel = _free_cancel(data.embed_a[c] + invert_word(data.embed_b[c]))
        if rel and rel not in relators:
            relators.append(rel)
    central = tuple(g for g in a.central if g in b.central)
    return Presentation(generators, tuple(relators), central)


def case_amalgam(case: str) -> AmalgamData:
    """The amalgam that assembles the Goeritz group of the given case
    from disk stabilizers over their common subgroup."""
    if case == "1a":
        vertex_a = stabilizer_presentation("disk", "1a")
        vertex_b = rename_generators(vertex_a, {"g1": "g2"})
        edge = stabilizer_presentation("disk_sphere", "1a")
    elif case == "1b":
        vertex_a = stabilizer_presentation("disk", "1b")
        vertex_b = stabilizer_presentation("disk_pair", "1b")
        edge = stabilizer_presentation("disk_sphere", "1b")
    elif case == "2":
        vertex_a = stabilizer_presentation("disk", "2")
        vertex_b = stabilizer_presentation("disk_pair", "2")
        edge = stabilizer_presentation("disk_disk", "2")
    else:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    identity = {c: (c,) for c in edge.generators}
    return AmalgamData(vertex_a, vertex_b, edge, identity, identity)


@dataclass(frozen=True)
class RewriteSystem:
    """An ordered list of rules (left word -> right word) together with a
    description of the termination order every rule decreases."""

    rules: tuple[tuple[Word, Word], ...]
    order_note: str = ""


def _build_rules(case: str) -> RewriteSystem:
    gens = _ALPHABETS[case]
    rules: list[tuple[Word, Word]] = []
    for g in gens:
        if g in _INVOLUTIONS:
            rules.append(((g + "'",), (g,)))
    for g in gens:
        if g in _INVOLUTIONS:
            rules.append(((g, g), ()))
    for g in ("b", "t"):
        if g in gens:
            rules.append(((g, g + "'"), ()))
            rules.append(((g + "'", g), ()))
    if case == "1b":
        rules.append((("d", "b"), ("a", "b", "d")))
        rules.append((("d", "b'"), ("a", "b'", "d")))
    movers = [g for g in gens if g != "a" and g in _INVOLUTIONS]
    free = [g for g in ("b", "t") if g in gens]
    a_left = [g for g in gens if g in _INVOLUTIONS and g != "a"]
    a_left += [tok for g in free for tok in (g, g + "'")]
    for tok in a_left:
        rules.append(((tok, "a"), ("a", tok)))
    if "t" in gens:
        for tok in [g for g in movers if g != "t"] + ["b", "b'"]:
            rules.append(((tok, "t"), ("t", tok)))
            rules.append(((tok, "t'"), ("t'", tok)))
    note = (
        "lexicographic (d-before-b inversions, length, primed tokens, "
        "positions of a, positions of t); every rule strictly decreases it"
    )
    return RewriteSystem(tuple(rules), note)


_SYSTEMS = {case: _build_rules(case) for case in CASES}


def rewrite_system(case: str) -> RewriteSystem:
    """The shipped confluent rewriting system for the case."""
    if case not in _SYSTEMS:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    return _SYSTEMS[case]


def termination_measure(word: Word) -> tuple[int, int, int, int, int]:
    """The well-founded measure that every rule application decreases:
    (number of d-before-b pairs, length, number of primed tokens, sum of
    positions of a letters, sum of positions of t letters)."""
    inversions = 0
    ds = 0
    primes = 0
    a_pos = 0
    t_pos = 0
    for i, tok in enumerate(word):
        base = _base(tok)
        if tok.endswith("'"):
            primes += 1
        if base == "d":
            ds += 1
        elif base == "b":
            inversions += ds
        elif base == "a":
            a_pos += i
        elif base == "t":
            t_pos += i
    return (inversions, len(word), primes, a_pos, t_pos)


def rewrite(word: Word, rules: Iterable[tuple[Word, Word]]) -> Word:
    """Apply the rules to exhaustion, scanning left to right and backing
    up after each application.  For a terminating, locally confluent
    system the result is the unique normal form."""
    rules = tuple(rules)
    w = list(word)
    max_lhs = max((len(l) for l, _ in rules), default=1)
    i = 0
    while i < len(w):
        for lhs, rhs in rules:
            k = len(lhs)
            if tuple(w[i : i + k]) == lhs:
                w[i : i + k] = rhs
                i = max(0, i - max_lhs + 1)
                break
        else:
            i += 1
    return tuple(w)


def normal_form(case: str, word: Word) -> Word:
    """The unique irreducible word equal to ``word`` in the case's
    group; idempotent."""
    _check_alphabet(word, case)
    return rewrite(word, rewrite_system(case).rules)


def equal(case: str, w1: Word, w2: Word) -> bool:
    """Word problem: equality in the Goeritz group of the case."""
    return normal_form(case, w1) == normal_form(case, w2)


class CriticalPair(NamedTuple):
    """An overlap word whose two one-step resolutions rewrite to distinct
    irreducible words."""

    word: Word
    left_result: Word
    right_result: Word


def check_local_confluence(rs: RewriteSystem) -> list[CriticalPair]:
    """Enumerate all overlaps of left-hand sides, rewrite both
    resolutions to irreducible form and report the mismatches.  An empty
    list certifies unique normal forms for a terminating system."""
    rules = rs.rules
    bad: list[CriticalPair] = []
    seen: set[tuple[Word, Word, Word]] = set()

    def record(word: Word, left: Word, right: Word) -> None:
        if left != right and (word, left, right) not in seen:
            seen.add((word, left, right))
            bad.append(CriticalPair(word, left, right))

    for l1, r1 in rules:
        for l2, r2 in rules:
            limit = min(len(l1), len(l2))
            for k in range(1, limit + 1):
                if l1[len(l1) - k :] != l2[:k]:
                    continue
                if k == len(l1) == len(l2) and (l1, r1) == (l2, r2):
                    continue
                word = l1 + l2[k:]
                record(
                    word,
                    rewrite(r1 + l2[k:], rules),
                    rewrite(l1[: len(l1) - k] + r2, rules),
                )
            if len(l2) < len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i : i + len(l2)] == l2:
                        record(
                            l1,
                            rewrite(r1, rules),
                            rewrite(l1[:i] + r2 + l1[i + len(l2) :], rules),
                        )
    return bad


class AbelianInvariants(NamedTuple):
    """Invariant factors of the abelianization: the torsion coefficients
    (each dividing the next) and the free rank."""

    torsion: tuple[int, ...]
    free_rank: int


def _smith_diagonal(rows: list[list[int]], ncols: int) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix, with the
    divisibility chain enforced."""
    a = [list(r) for r in rows]
    nrows = len(a)
    diag: list[int] = []
    top = 0
    while top < nrows and top < ncols:
        piv = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[top], a[i0] = a[i0], a[top]
        if j0 != top:
            for row in a:
                row[top], row[j0] = row[j0], row[top]
        p = a[top][top]
        dirty = False
        for i in range(top + 1, nrows):
            q = a[i][top] // p
            if q:
                for j in range(top, ncols):
                    a[i][j] -= q * a[top][j]
            if a[i][top]:
                dirty = True
        for j in range(top + 1, ncols):
            q = a[top][j] // p
            if q:
                for i in range(top, nrows):
                    a[i][j] -= q * a[i][top]
            if a[top][j]:
                dirty = True
        if dirty:
            continue
        offender = None
        for i in range(top + 1, nrows):
            if any(a[i][j] % p for j in range(top + 1, ncols)):
                offender = i
                break
        if offender is not None:
            for j in range(top, ncols):
                a[top][j] += a[offender][j]
            continue
        diag.append(abs(p))
        top += 1
    return diag


def abelianization(p: Presentation) -> AbelianInvariants:
    """Invariant factors of the abelianized group, from the Smith normal
    form of the relator exponent matrix."""
    index = {g: i for i, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for tok in r:
            row[index[_base(tok)]] += -1 if tok.endswith("'") else 1
        rows.append(row)
    diag = _smith_diagonal(rows, len(p.generators))
    torsion = tuple(d for d in diag if d > 1)
    free_rank = len(p.generators) - sum(1 for d in diag if d != 0)
    return AbelianInvariants(torsion, free_rank)


def element_order(case: str, word: Word, cutoff: int = 64) -> int | None:
    """Order of the element, probing powers up to ``cutoff``; None means
    no torsion was found up to the cutoff (not a proof of infinite
    order)."""
    nf = normal_form(case, word)
    if not nf:
        return 1
    power: Word = ()
    for k in range(1, cutoff + 1):
        power = rewrite(power + nf, rewrite_system(case).rules)
        if not power:
            return k
    return None
