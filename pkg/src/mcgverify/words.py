"""Exact word and conjugacy calculus in pi_1(N_g) = <x_1,...,x_g | x_1^2 x_2^2 ... x_g^2>.

A word is a tuple of nonzero integers: letter ``k > 0`` is the generator
``x_k`` and ``-k`` is its inverse.  The generator ``x_i`` is the one-sided
loop through the i-th crosscap of the sphere-with-g-crosscaps model,
crosscaps ordered left to right.  (Any other crosscap ordering would change
every derived formula coherently; this package fixes this one convention
throughout.)

Triviality is decided with Dehn's algorithm: any subword covering strictly
more than half of a cyclic rotation of the relator or of its inverse is
replaced by the inverse of the complementary part.  For genus >= 4 the
presentation satisfies C'(1/6), where greedy strict reduction is a complete
decision procedure.  For genus 3 the relator has length 6 and single-letter
pieces, so strict reduction alone can get stuck; there the reducer also
explores length-preserving half-for-half exchanges exhaustively and accepts
a word as nontrivial only once the whole equal-length component is
exhausted.  The genus-3 route is cross-validated against brute-force
oracles in the test suite.

Conjugacy works on cyclic words: the canonical form of a conjugacy class is
the lexicographically smallest member of the closure of the cyclically
reduced word under rotation and half-for-half exchange.  Closing under
exchanges matters at every genus: for example ``x1^2 x2^2`` equals
``(x3^2 x4^2)^-1`` in genus 4, and the two sides are not rotations of each
other.

All functions are pure.  ``SurfacePresentation`` carries immutable data
plus internal memo tables and may be shared between threads.
"""

from __future__ import annotations

import re
from collections import deque

from .errors import BudgetExceeded, ConjugacyMismatch

Word = tuple  # tuple of nonzero ints

EMPTY: Word = ()

# Component searches are tiny in practice; the cap only guards against a
# pathological input locking up a batch run.
SATURATION_CAP = 200_000


def free_reduce(word) -> Word:
    """Freely reduce a word, cancelling adjacent x x^-1 pairs.

    >>> free_reduce((1, -1, 2))
    (2,)
    >>> free_reduce(())
    ()
    >>> free_reduce((1, 2, -2, -1, 3))
    (3,)
    """
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse(word) -> Word:
    """Inverse word: reversed with all letters negated.

    >>> inverse((1, -2, 3))
    (-3, 2, -1)
    """
    return tuple(-letter for letter in reversed(word))


def mul(*words) -> Word:
    """Concatenate and freely reduce.

    >>> mul((1, 2), (-2, 3))
    (1, 3)
    """
    out = []
    for word in words:
        for letter in word:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
    return tuple(out)


def conjugate(c, word) -> Word:
    """c * word * c^-1, reduced."""
    return mul(c, word, inverse(c))


def parse_word(text: str) -> Word:
    """Parse ``"x1 x2^-1 x3"`` (also accepts ``*`` separators) into a word.

    >>> parse_word("x1 x2^-1")
    (1, -2)
    >>> parse_word("")
    ()
    """
    text = text.replace("*", " ").strip()
    if not text:
        return EMPTY
    letters = []
    for token in text.split():
        m = re.fullmatch(r"x(\d+)(\^(-?\d+))?", token)
        if not m:
            raise ValueError(f"bad letter {token!r}")
        idx = int(m.group(1))
        exp = int(m.group(3)) if m.group(3) else 1
        if idx == 0:
            raise ValueError("generator indices start at 1")
        letters.extend([idx if exp > 0 else -idx] * abs(exp))
    return free_reduce(tuple(letters))


def format_word(word) -> str:
    """Render a word as ``"x1 x2^-1"``; the empty word renders as ``"1"``."""
    if not word:
        return "1"
    parts = []
    for letter in word:
        parts.append(f"x{letter}" if letter > 0 else f"x{-letter}^-1")
    return " ".join(parts)


def abelianized(genus: int, word) -> tuple:
    """Exponent vector in H_1(N_g; R), i.e. Z^g with x_g eliminated via
    c_g = -(c_1 + ... + c_{g-1}).  Returns a (g-1)-tuple of ints."""
    counts = [0] * (genus + 1)
    for letter in word:
        counts[abs(letter)] += 1 if letter > 0 else -1
    last = counts[genus]
    return tuple(counts[i] - last for i in range(1, genus))


class SurfacePresentation:
    """The one-relator presentation of pi_1(N_g), with the lookup tables
    used by Dehn reduction.

    ``relator_shifts`` holds all 4g cyclic rotations of the relator and of
    its inverse; a subword of a rotation is a prefix of another rotation,
    so prefix tables suffice for matching.
    """

    def __init__(self, genus: int):
        if genus < 3:
            raise ValueError("genus must be at least 3")
        self.genus = genus
        relator = []
        for i in range(1, genus + 1):
            relator += [i, i]
        self.relator: Word = tuple(relator)
        shifts = []
        for base in (self.relator, inverse(self.relator)):
            for k in range(len(base)):
                shifts.append(base[k:] + base[:k])
        self.relator_shifts = tuple(shifts)
        assert len(set(self.relator_shifts)) == 4 * genus

        g = genus
        # Prefix of length g+1 determines the rotation uniquely (length-2
        # runs cannot fill a window of length g+1 >= 4).
        self._strict = {s[: g + 1]: s for s in self.relator_shifts}
        assert len(self._strict) == 4 * genus
        # Exactly-half table: half a rotation equals the inverse of the
        # complementary half.
        self._half = {s[:g]: inverse(s[g:]) for s in self.relator_shifts}

        self._canonical_cache: dict = {}
        self._trivial_cache: dict = {}

    def __repr__(self):
        return f"SurfacePresentation(genus={self.genus})"

    def abelianized(self, word) -> tuple:
        return abelianized(self.genus, word)


_PRESENTATIONS: dict = {}


def get_presentation(genus: int) -> SurfacePresentation:
    """Shared per-genus presentation instance (immutable, memoized)."""
    pres = _PRESENTATIONS.get(genus)
    if pres is None:
        pres = _PRESENTATIONS[genus] = SurfacePresentation(genus)
    return pres


def _strict_pass(pres: SurfacePresentation, word: Word) -> Word:
    """One sweep of strict Dehn reduction on a freely reduced word.
    Returns the word unchanged if no subword longer than half a rotation
    occurs."""
    g = pres.genus
    window = g + 1
    full = 2 * g
    w = word
    i = 0
    while i + window <= len(w):
        shift = pres._strict.get(w[i : i + window])
        if shift is None:
            i += 1
            continue
        m = window
        n = len(w)
        while m < full and i + m < n and w[i + m] == shift[m]:
            m += 1
        replacement = inverse(shift[m:])
        w = mul(w[:i], replacement, w[i + m :])
        i = 0
    return w


def dehn_reduce(pres: SurfacePresentation, word) -> Word:
    """Strict Dehn reduction: repeatedly replace any subword strictly
    longer than half of a relator rotation by the shorter complement, then
    freely reduce, until no such subword remains.

    Idempotent and never length-increasing.  For genus >= 4 the result is
    empty if and only if the word represents the identity; genus 3 needs
    the extra search done by :func:`is_trivial`.
    """
    return _strict_pass(pres, free_reduce(word))


def _half_swaps_linear(pres: SurfacePresentation, word: Word):
    """Yield words obtained by one half-for-half exchange at any position.
    Length is preserved before free reduction; afterwards it can only
    drop."""
    g = pres.genus
    n = len(word)
    for i in range(n - g + 1):
        replacement = pres._half.get(word[i : i + g])
        if replacement is not None:
            yield mul(word[:i], replacement, word[i + g :])


def is_trivial(pres: SurfacePresentation, word) -> bool:
    """True iff the word represents the identity of pi_1(N_g).

    Genus >= 4 is settled by strict Dehn reduction alone.  For genus 3 a
    stuck nonempty word is only declared nontrivial after exhausting its
    component under length-preserving half-exchanges without finding a
    shorter equivalent.
    """
    w = dehn_reduce(pres, word)
    result = _is_trivial_reduced(pres, w)
    # Abelianization is a one-sided oracle: a trivial word must die in
    # H_1.  Active in test builds (assertions on).
    assert not result or not any(pres.abelianized(word)), "trivial word with nonzero homology"
    return result


def _is_trivial_reduced(pres: SurfacePresentation, w: Word) -> bool:
    while True:
        if not w:
            return True
        if pres.genus >= 4:
            return False
        cached = pres._trivial_cache.get(w)
        if cached is not None:
            return cached
        shorter = _shorter_equivalent(pres, w)
        if shorter is None:
            pres._trivial_cache[w] = False
            return False
        w = shorter


def _shorter_equivalent(pres: SurfacePresentation, w: Word):
    """Search the equal-length component of ``w`` under half-exchanges for
    any member that strict reduction can shorten.  Returns the shorter
    word, or None if the component is exhausted."""
    seen = {w}
    queue = deque([w])
    while queue:
        if len(seen) > SATURATION_CAP:
            raise BudgetExceeded(f"half-exchange component exceeded {SATURATION_CAP} words")
        current = queue.popleft()
        for neighbor in _half_swaps_linear(pres, current):
            if len(neighbor) < len(current):
                return neighbor
            reduced = _strict_pass(pres, neighbor)
            if len(reduced) < len(current):
                return reduced
            if reduced not in seen:
                seen.add(reduced)
                queue.append(reduced)
    return None


# ---------------------------------------------------------------------------
# Cyclic words and conjugacy


def _cyclic_free_reduce(word: Word, conj: Word) -> tuple:
    """Strip matching first/last letters: returns (core, conj') with
    word = conj' core conj'^-1 modulo the tracked outer conjugator."""
    w = free_reduce(word)
    pre = list(conj)
    while len(w) >= 2 and w[0] == -w[-1]:
        pre.append(w[0])
        w = w[1:-1]
    return w, tuple(pre)


def _cyclic_shrink(pres: SurfacePresentation, word: Word, conj: Word):
    """Apply strict Dehn reduction over all rotations until stable.
    Returns (core, conj) with the original word conjugate to core by conj."""
    w, conj = _cyclic_free_reduce(word, conj)
    changed = True
    while changed and w:
        changed = False
        for k in range(len(w)):
            rotated = w[k:] + w[:k]
            reduced = _strict_pass(pres, rotated)
            if len(reduced) < len(w):
                w, conj = _cyclic_free_reduce(reduced, conj + w[:k])
                changed = True
                break
    return w, conj


def _component(pres: SurfacePresentation, start: Word):
    """Closure of a cyclically reduced word under rotation and
    half-exchange at constant length.  Yields a dict word -> conjugator
    (relative to ``start``), unless some member shrinks, in which case
    returns ('shrunk', word, conjugator)."""
    members = {start: EMPTY}
    queue = deque([start])
    while queue:
        if len(members) > SATURATION_CAP:
            raise BudgetExceeded(f"cyclic component exceeded {SATURATION_CAP} words")
        current = queue.popleft()
        base_conj = members[current]
        neighbors = []
        for k in range(1, len(current)):
            neighbors.append((current[k:] + current[:k], current[:k]))
        for swapped in _half_swaps_linear(pres, current):
            neighbors.append((swapped, EMPTY))
        for neighbor, step in neighbors:
            reduced, conj = _cyclic_free_reduce(neighbor, EMPTY)
            reduced2 = _strict_pass(pres, reduced)
            if len(reduced2) < len(reduced):
                reduced, conj = _cyclic_free_reduce(reduced2, conj)
            total = mul(base_conj, step, conj)
            if len(reduced) < len(start):
                return ("shrunk", reduced, total)
            if reduced not in members:
                members[reduced] = total
                queue.append(reduced)
    return ("done", members, None)


def _canonical_with_conj(pres: SurfacePresentation, word) -> tuple:
    """Canonical cyclic form K and conjugator c with word = c K c^-1 in the
    group.  Conjugate words share the same K."""
    w = dehn_reduce(pres, word)
    conj = EMPTY
    w, conj = _cyclic_shrink(pres, w, conj)
    while w:
        outcome, payload, extra = _component(pres, w)
        if outcome == "shrunk":
            w2, conj2 = _cyclic_shrink(pres, payload, mul(conj, extra))
            w, conj = w2, conj2
            continue
        members = payload
        best = min(members)
        return best, mul(conj, members[best])
    return EMPTY, conj


def cyclic_canonical(pres: SurfacePresentation, word) -> Word:
    """Canonical representative of the conjugacy class of ``word``."""
    cached = pres._canonical_cache.get(word)
    if cached is None:
        cached = _canonical_with_conj(pres, word)[0]
        pres._canonical_cache[word] = cached
    return cached


class CyclicWord:
    """A conjugacy class of pi_1(N_g), represented canonically.  Equality
    is invariant under rotation of the input word."""

    __slots__ = ("genus", "word")

    def __init__(self, pres: SurfacePresentation, word):
        self.genus = pres.genus
        self.word = cyclic_canonical(pres, tuple(word))

    def __eq__(self, other):
        return (
            isinstance(other, CyclicWord)
            and self.genus == other.genus
            and self.word == other.word
        )

    def __hash__(self):
        return hash((self.genus, self.word))

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return f"CyclicWord({format_word(self.word)})"


def cyclic_reduce(pres: SurfacePresentation, word) -> CyclicWord:
    """Cyclically Dehn-reduced class of a word (canonical representative)."""
    return CyclicWord(pres, word)


def is_conjugate(pres: SurfacePresentation, a, b) -> bool:
    """True iff ``a`` and ``b`` are conjugate in pi_1(N_g).

    Decided by comparing canonical cyclic forms; a quick abelianization
    test (a conjugation invariant) short-circuits most negatives.
    """
    a, b = tuple(a), tuple(b)
    if pres.abelianized(a) != pres.abelianized(b):
        return False
    return cyclic_canonical(pres, a) == cyclic_canonical(pres, b)


def _primitive_root(pres: SurfacePresentation, canon: Word, conj: Word) -> Word:
    """Primitive root of the element conj * canon * conj^-1: the centralizer
    of a nontrivial element is cyclic on this root.  Detected as literal
    periodicity of a member of the canonical component; failures only cost
    candidates, never correctness."""
    n = len(canon)
    for d in range(1, n):
        if n % d:
            continue
        if canon == canon[:d] * (n // d):
            return mul(conj, canon[:d], inverse(conj))
    return mul(conj, canon, inverse(conj))


def find_conjugators(pres: SurfacePresentation, a, b, bound: int = 16) -> list:
    """Candidate conjugators c with c a c^-1 = b.

    One base conjugator is recovered from the canonical-form matching; it
    is composed with powers z^k, |k| <= bound, of the primitive root z of
    ``a`` (the centralizer candidates).  Every returned word is verified.

    Raises ConjugacyMismatch if the two words are not conjugate.
    """
    a, b = tuple(a), tuple(b)
    canon_a, conj_a = _canonical_with_conj(pres, a)
    canon_b, conj_b = _canonical_with_conj(pres, b)
    if canon_a != canon_b:
        raise ConjugacyMismatch(
            f"{format_word(a)} and {format_word(b)} are not conjugate"
        )
    if not canon_a:
        return [EMPTY]
    base = mul(conj_b, inverse(conj_a))
    root = _primitive_root(pres, canon_a, conj_a)
    candidates = [base]
    power = EMPTY
    inv_power = EMPTY
    for _ in range(bound):
        power = mul(power, root)
        inv_power = mul(inv_power, inverse(root))
        candidates.append(mul(base, power))
        candidates.append(mul(base, inv_power))
    verified = [c for c in candidates if is_trivial(pres, mul(c, a, inverse(c), inverse(b)))]
    assert verified, "canonical matching produced no valid conjugator"
    return verified
