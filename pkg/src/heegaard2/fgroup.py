"""Words in the rank-2 free group on generators x and y.

A word is an ASCII string over the alphabet {x, y, X, Y}, where the
uppercase letters stand for the inverses of the lowercase ones.  The
empty word prints as "1".  Cyclic words (curve words read off from a
closed curve, well defined only up to rotation) are represented by a
canonical form: the lexicographically least rotation of the free and
cyclic reduction, under the fixed letter order x < X < y < Y.

Everything here is a pure function on immutable values, so all of it is
safe to call concurrently.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

ALPHABET = "xXyY"

_INVERSE = {"x": "X", "X": "x", "y": "Y", "Y": "y"}

# Translate letters to naturally ordered characters so that plain string
# comparison realises the order x < X < y < Y.
_ORDER_KEY = str.maketrans("xXyY", "abcd")

_SWAP_XY = str.maketrans("xXyY", "yYxX")
_INVERT_X = str.maketrans("xX", "Xx")
_INVERT_Y = str.maketrans("yY", "Yy")


def parse_word(text: str) -> str:
    """Parse an ASCII word; "1" denotes the empty word.

    >>> parse_word("xyX")
    'xyX'
    >>> parse_word("1")
    ''
    """
    if text == "1":
        return ""
    bad = set(text) - set(ALPHABET)
    if bad:
        raise ValueError(
            f"invalid letters {sorted(bad)}; words use x, y, X, Y (X = x inverse)"
        )
    return text


def format_word(word: str) -> str:
    """Render a word; the empty word prints as "1"."""
    return word if word else "1"


def invert(word: str) -> str:
    """The inverse word: reversed, with every letter inverted.

    >>> invert("xxY")
    'yXX'
    """
    return word[::-1].swapcase()


def free_reduce(word: str) -> str:
    """The unique freely reduced word equal to ``word``.

    >>> free_reduce("xyYx")
    'xx'
    >>> free_reduce("xX")
    ''
    """
    out: list[str] = []
    for ch in word:
        if out and out[-1] == _INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def cyclic_reduce(word: str) -> str:
    """Freely reduce, then strip inverse first/last pairs."""
    w = free_reduce(word)
    while len(w) >= 2 and w[0] == _INVERSE[w[-1]]:
        w = w[1:-1]
    return w


def cyclic_canonical(word: str) -> str:
    """Canonical form of the cyclic word: the least rotation of the
    cyclic reduction under the order x < X < y < Y.

    Two words that are equal up to rotation have the same output.

    >>> cyclic_canonical("yxx")
    'xxy'
    >>> cyclic_canonical("xyX")
    'y'
    """
    w = cyclic_reduce(word)
    n = len(w)
    if n <= 1:
        return w
    keyed = w.translate(_ORDER_KEY)
    doubled = keyed + keyed
    best = min(range(n), key=lambda i: doubled[i : i + n])
    return w[best:] + w[:best]


def cyclic_equal(w1: str, w2: str, up_to_inversion: bool = False) -> bool:
    """Equality of curve words up to rotation.

    With ``up_to_inversion`` the comparison also allows reversing the
    orientation of one curve (global inversion of one word).
    """
    a = cyclic_canonical(w1)
    if a == cyclic_canonical(w2):
        return True
    return up_to_inversion and a == cyclic_canonical(invert(w2))


def letter_symmetries(word: str) -> Iterator[str]:
    """The eight letter substitutions generated by swapping x with y and
    inverting x or y.  Each is an automorphism, so reduction, primitivity
    and cyclic length are preserved."""
    for swap in (False, True):
        base = word.translate(_SWAP_XY) if swap else word
        for ix in (False, True):
            mid = base.translate(_INVERT_X) if ix else base
            for iy in (False, True):
                yield mid.translate(_INVERT_Y) if iy else mid


def letter_obstruction_reason(word: str) -> str | None:
    """Reason string when the letter-content test fires, else None."""
    w = cyclic_reduce(word)
    seen = set(w)
    if "x" in seen and "X" in seen:
        return "contains both x and X"
    if "y" in seen and "Y" in seen:
        return "contains both y and Y"
    n = len(w)
    if n >= 2:
        pairs = {w[i] + w[(i + 1) % n] for i in range(n)}
        if pairs & {"xx", "XX"} and pairs & {"yy", "YY"}:
            return "contains a square of each generator"
    return None


def has_letter_obstruction(word: str) -> bool:
    """Letter-content certificate that a cyclic word is neither trivial
    nor a power of a primitive element.

    Fires when the cyclic reduction contains both x and X, both y and Y,
    or a square of each generator (x or X twice in a row, and y or Y
    twice in a row, as cyclic subwords).  A word that passes is merely
    *not rejected*; it may still fail to be a primitive power.
    """
    return letter_obstruction_reason(word) is not None


def _has_flanked_power(v: str) -> bool:
    # cyclic subword x y^p X with p >= 1, literal letters
    n = len(v)
    if n < 3:
        return False
    d = v + v
    for i in range(n):
        if d[i] != "x":
            continue
        j = i + 1
        while j < i + n and d[j] == "y":
            j += 1
        p = j - i - 1
        if p >= 1 and p + 2 <= n and d[j] == "X":
            return True
    return False


def _has_double_square(v: str) -> bool:
    # cyclic subword xxyy, literal letters
    n = len(v)
    if n < 4:
        return False
    idx = (v + v).find("xxyy")
    return 0 <= idx < n


def has_subword_obstruction(word: str) -> bool:
    """Subword certificate: a cyclic subword x y^p X (p >= 1) or x x y y,
    up to inverting x, inverting y, or reversing the curve orientation
    (global inversion).

    Stronger than :func:`has_letter_obstruction`: whenever this fires,
    the letter test fires as well.
    """
    w = cyclic_reduce(word)
    for gi in (False, True):
        base = invert(w) if gi else w
        for ix in (False, True):
            mid = base.translate(_INVERT_X) if ix else base
            for iy in (False, True):
                v = mid.translate(_INVERT_Y) if iy else mid
                if _has_flanked_power(v) or _has_double_square(v):
                    return True
    return False


def _block_form(v: str) -> bool:
    # cyclic product of blocks x^e y^n / x^e y^(n+1) with literal letters:
    # one sign of x throughout, only positive y, y-runs of two adjacent sizes
    if "Y" in v or ("x" in v and "X" in v):
        return False
    n = len(v)
    xs = [i for i, ch in enumerate(v) if ch in "xX"]
    if not xs:
        return False
    gaps = []
    for k, i in enumerate(xs):
        nxt = xs[(k + 1) % len(xs)]
        gaps.append((nxt - i - 1) % n)
    return max(gaps) - min(gaps) <= 1


def has_primitive_block_form(word: str) -> bool:
    """Necessary cyclic form for primitive words.

    After one of the eight letter symmetries, the cyclic reduction must
    decompose into blocks x^e y^n and x^e y^(n+1) for a single sign e and
    a single n >= 0.  Every primitive word passes; many imprimitive words
    pass as well (e.g. powers of a single generator), so this is only a
    necessary test.
    """
    w = cyclic_reduce(word)
    if not w:
        return False
    return any(_block_form(v) for v in letter_symmetries(w))


# The length-changing Whitehead automorphisms of the rank-2 free group,
# modulo inner automorphisms: fix one generator and multiply the other by
# it on either side with either sign.  Given as (image of x, image of y).
WHITEHEAD_AUTOMORPHISMS: tuple[tuple[str, str], ...] = (
    ("xy", "y"),
    ("xY", "y"),
    ("yx", "y"),
    ("Yx", "y"),
    ("x", "yx"),
    ("x", "yX"),
    ("x", "xy"),
    ("x", "Xy"),
)


def apply_endomorphism(word: str, x_image: str, y_image: str) -> str:
    """Substitute images for the generators (no reduction performed)."""
    table = {
        "x": x_image,
        "X": invert(x_image),
        "y": y_image,
        "Y": invert(y_image),
    }
    return "".join(table[ch] for ch in word)


def is_primitive(word: str) -> bool:
    """Decide whether the word is primitive (a member of a free
    generating pair), by greedy Whitehead reduction.

    Repeatedly applies the first automorphism from
    :data:`WHITEHEAD_AUTOMORPHISMS` that shortens the cyclic length; the
    word is primitive exactly when the terminal cyclic length is 1.

    >>> is_primitive("xxy")
    True
    >>> is_primitive("xxyy")
    False
    """
    w = cyclic_canonical(word)
    if not w:
        return False
    while True:
        n = len(w)
        if n == 1:
            return True
        for xi, yi in WHITEHEAD_AUTOMORPHISMS:
            image = cyclic_canonical(apply_endomorphism(w, xi, yi))
            if len(image) < n:
                w = image
                break
        else:
            return False


@dataclass(frozen=True)
class PrimitivityVerdict:
    """Classification of a word: trivial, primitive, a proper power of a
    primitive element (with its root and exponent), or neither."""

    kind: str  # "trivial" | "primitive" | "power-of-primitive" | "neither"
    root: str | None = None
    exponent: int | None = None


def primitive_power_root(word: str) -> PrimitivityVerdict:
    """Compute the cyclic root and maximal exponent of the word, then
    classify the root with the Whitehead oracle.

    >>> primitive_power_root("xxx").kind, primitive_power_root("xxx").root
    ('power-of-primitive', 'x')
    """
    c = cyclic_canonical(word)
    n = len(c)
    if n == 0:
        return PrimitivityVerdict("trivial")
    root, exponent = c, 1
    for d in range(1, n):
        if n % d == 0 and c[:d] * (n // d) == c:
            root, exponent = c[:d], n // d
            break
    if not is_primitive(root):
        return PrimitivityVerdict("neither")
    if exponent == 1:
        return PrimitivityVerdict("primitive")
    return PrimitivityVerdict("power-of-primitive", root, exponent)


def word_from_intersections(crossings: Iterable[tuple[str, int]]) -> str:
    """Build the canonical cyclic word read off from a signed crossing
    sequence of a curve with the two dual disks.

    Each crossing is a pair (generator, sign) with generator "x" or "y"
    and sign +1 or -1.

    >>> word_from_intersections([("x", 1), ("x", 1), ("y", 1)])
    'xxy'
    """
    letters = []
    for gen, sign in crossings:
        if gen not in ("x", "y"):
            raise ValueError(f"unknown generator {gen!r}")
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        letters.append(gen if sign == 1 else gen.upper())
    return cyclic_canonical("".join(letters))


def primitive_words_up_to(max_len: int) -> set[str]:
    """All primitive cyclic words of length at most ``max_len``, as
    canonical forms, enumerated by closing the automorphism orbit of the
    generator x under Whitehead moves and letter symmetries."""
    if max_len < 1:
        return set()
    seen = {"x"}
    frontier = ["x"]
    while frontier:
        fresh = []
        for w in frontier:
            images = [
                cyclic_canonical(apply_endomorphism(w, xi, yi))
                for xi, yi in WHITEHEAD_AUTOMORPHISMS
            ]
            images.extend(cyclic_canonical(s) for s in letter_symmetries(w))
            for img in images:
                if 1 <= len(img) <= max_len and img not in seen:
                    seen.add(img)
                    fresh.append(img)
        frontier = fresh
    return seen
