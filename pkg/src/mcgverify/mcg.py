"""Mapping classes of N_g as automorphisms of pi_1, up to inner automorphism.

For a closed surface the mapping class group embeds in the outer
automorphism group of pi_1, so a mapping class is stored as the tuple of
images of the generators x_1..x_g, and every identity / order / equality
question is decided up to composition with an inner automorphism.

The generator catalog covers the named elements used throughout:

* ``t_alpha_i`` -- Dehn twist about the chain curve ``alpha_i = x_i x_{i+1}``
  (two-sided; passes through crosscaps i, i+1),
* ``t_beta``    -- Dehn twist about ``beta``, the curve that merges
  ``alpha_1`` and ``alpha_3`` around the first four crosscaps,
* ``t_eps``     -- Dehn twist about ``eps = y^{-1}(alpha_{g-2})``,
* ``u_i``       -- crosscap transposition swapping crosscaps i, i+1,
* ``y``         -- crosscap slide ``t_alpha_{g-1} . u_{g-1}``.

The pi_1 formulas are derived from the disk-with-crosscaps model and are
certified, rather than proved here: ``build_catalog`` runs a validation
suite (relator certificate, exact inverses, locality, braid and
commutation relations) and the claim catalog exercises the order, identity
and curve-orbit facts that pin down every direction choice.  A wrong
formula fails loudly with :class:`ValidationFailure`.

Composition convention: products act right-to-left, ``(f g)(x) = f(g(x))``,
matching the usual composition of homeomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GenusMismatch, ValidationFailure
from .words import (
    EMPTY,
    SurfacePresentation,
    cyclic_canonical,
    dehn_reduce,
    find_conjugators,
    format_word,
    free_reduce,
    get_presentation,
    inverse,
    is_conjugate,
    is_trivial,
    mul,
)
from .errors import ConjugacyMismatch

# ---------------------------------------------------------------------------
# Automorphisms


class Automorphism:
    """An automorphism of pi_1(N_g), given by reduced images of x_1..x_g.

    Immutable; composition is :func:`compose`.  Validity (that the images
    define a homeomorphism-induced automorphism) is certified by the
    catalog, not assumed.
    """

    __slots__ = ("genus", "images")

    def __init__(self, genus: int, images):
        self.genus = genus
        self.images = tuple(tuple(w) for w in images)
        if len(self.images) != genus:
            raise ValueError("need one image per generator")

    def __call__(self, word) -> tuple:
        return substitute(get_presentation(self.genus), self.images, word)

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and self.genus == other.genus
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.genus, self.images))

    def __repr__(self):
        ims = ", ".join(f"x{i} -> {format_word(w)}" for i, w in enumerate(self.images, 1))
        return f"Automorphism(genus={self.genus}; {ims})"


def substitute(pres: SurfacePresentation, images, word) -> tuple:
    """Apply an image table to a word and reduce."""
    out = []
    for letter in word:
        img = images[abs(letter) - 1]
        if letter < 0:
            img = inverse(img)
        out.extend(img)
    return dehn_reduce(pres, tuple(out))


def identity_automorphism(genus: int) -> Automorphism:
    return Automorphism(genus, [(i,) for i in range(1, genus + 1)])


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """a after b: the composite sends x_i to a(b(x_i)), images reduced."""
    if a.genus != b.genus:
        raise GenusMismatch(f"genus {a.genus} vs {b.genus}")
    pres = get_presentation(a.genus)
    return Automorphism(a.genus, [substitute(pres, a.images, img) for img in b.images])


def is_identity(a: Automorphism) -> bool:
    return all(im == (i,) for i, im in enumerate(a.images, 1))


# ---------------------------------------------------------------------------
# Inner-automorphism status


@dataclass(frozen=True)
class Inner:
    """The automorphism is conjugation by ``witness``."""

    witness: tuple


@dataclass(frozen=True)
class NotInner:
    """Certified not inner (a conjugacy-invariant rules it out)."""

    reason: str = ""


@dataclass(frozen=True)
class Inconclusive:
    """No witness found within the configured bound; not a verdict."""

    bound: int


@dataclass(frozen=True)
class InfiniteWithinBound:
    """No power up to ``bound`` is inner."""

    bound: int


def is_inner(pres: SurfacePresentation, a: Automorphism, bound: int = 16):
    """Decide whether ``a`` is an inner automorphism.

    Returns Inner(witness) with a verified conjugator, NotInner when some
    invariant (homology action, or the conjugacy class of a generator
    image) rules it out, and Inconclusive(bound) when all candidate
    conjugators within the centralizer power bound fail.  An Inner verdict
    always carries a witness w with w x_i w^-1 = a(x_i) for every i.
    """
    g = pres.genus
    # Inner automorphisms act trivially on homology.
    for i in range(1, g + 1):
        if pres.abelianized(a.images[i - 1]) != pres.abelianized((i,)):
            return NotInner(f"homology class of image of x{i} moved")
    for i in range(1, g + 1):
        if not is_conjugate(pres, (i,), a.images[i - 1]):
            return NotInner(f"image of x{i} not conjugate to x{i}")
    candidates = find_conjugators(pres, (1,), a.images[0], bound=bound)
    for c in candidates:
        c_inv = inverse(c)
        if all(
            is_trivial(pres, mul(c, (i,), c_inv, inverse(a.images[i - 1])))
            for i in range(2, g + 1)
        ):
            return Inner(c)
    return Inconclusive(bound)


# ---------------------------------------------------------------------------
# Generator catalog

# beta merges alpha_1 and alpha_3 around the first four crosscaps; the
# connecting arc runs along alpha_2, so the word is
# (x1 x2) * (x2 x3)(x3 x4)(x2 x3)^-1.
BETA_WORD = (1, 2, 2, 3, 3, 4, -3, -2)


def _letter_images(genus: int) -> list:
    return [(i,) for i in range(1, genus + 1)]


def chain_twist_images(genus: int, i: int, sign: int = 1):
    """Twist about alpha_i = x_i x_{i+1}.  The positive direction is the
    one pinned by the braid/order/identity claims."""
    ims = _letter_images(genus)
    if sign > 0:
        ims[i - 1] = (i, i, i + 1)
        ims[i] = (-(i + 1), -i, i + 1)
    else:
        ims[i - 1] = (i, -(i + 1), -i)
        ims[i] = (i, i + 1, i + 1)
    return ims

def transposition_images(genus: int, i: int, sign: int = 1):
    """Crosscap transposition u_i.  Fixes x_i^2 x_{i+1}^2 exactly; the
    inverse direction swaps the roles of the two crosscaps."""
    ims = _letter_images(genus)
    if sign > 0:
        ims[i - 1] = (i + 1,)
        ims[i] = (-(i + 1), -(i + 1), i, i + 1, i + 1)
    else:
        ims[i - 1] = (i, i, i + 1, -i, -i)
        ims[i] = (i,)
    return ims


def beta_twist_images(genus: int, sign: int = 1):
    """Twist about beta.

    The images insert conjugates of the beta word in the unique pattern
    that fixes both the subsurface boundary word x1^2..x4^2 and the beta
    word itself (the insertion exponents alternate because the band of
    beta flips orientation at each crosscap).
    """
    B = BETA_WORD if sign > 0 else inverse(BETA_WORD)
    Bi = inverse(B)
    ims = _letter_images(genus)
    ims[0] = free_reduce((1,) + B)
    ims[1] = free_reduce(Bi + (2,))
    ims[2] = free_reduce((-2,) + B + (2, 3))
    ims[3] = free_reduce((-3, -2) + Bi + (2, 3, 4))
    return ims


# Symbol encoding: (kind, index, sign); kind in {"a", "b", "e", "u", "y"}.
# MappingClassWord = tuple of symbols, applied right-to-left.


def talpha(i: int, sign: int = 1):
    return ("a", i, sign)


def tbeta(sign: int = 1):
    return ("b", 0, sign)


def teps(sign: int = 1):
    return ("e", 0, sign)


def transposition(i: int, sign: int = 1):
    return ("u", i, sign)


def crosscap_slide(sign: int = 1):
    return ("y", 0, sign)


def inverse_word(word):
    """Inverse of a mapping-class word: reverse order, flip signs."""
    return tuple((k, i, -s) for (k, i, s) in reversed(word))


def word_power(word, n: int):
    if n < 0:
        return inverse_word(word) * (-n)
    return tuple(word) * n


def format_mcg_word(word) -> str:
    if not word:
        return "id"
    names = {"a": "t_a{}", "b": "t_b", "e": "t_e", "u": "u{}", "y": "y"}
    parts = []
    for kind, idx, sign in word:
        base = names[kind].format(idx)
        parts.append(base if sign > 0 else base + "^-1")
    return " ".join(parts)


class GeneratorCatalog:
    """Per-genus table of generator automorphisms, their stored inverses,
    and the curve words for alpha_1..alpha_{g-1}, beta, eps.

    Built by :func:`build_catalog`, which also certifies the formulas.
    Immutable after construction and safe to share between threads.
    """

    def __init__(self, genus: int):
        if genus < 3:
            raise ValueError("genus must be at least 3")
        self.genus = genus
        self.presentation = get_presentation(genus)
        g = genus

        self._autos = {}
        for i in range(1, g):
            self._autos[("a", i, 1)] = Automorphism(g, chain_twist_images(g, i, 1))
            self._autos[("a", i, -1)] = Automorphism(g, chain_twist_images(g, i, -1))
            self._autos[("u", i, 1)] = Automorphism(g, transposition_images(g, i, 1))
            self._autos[("u", i, -1)] = Automorphism(g, transposition_images(g, i, -1))
        if g >= 4:
            self._autos[("b", 0, 1)] = Automorphism(g, beta_twist_images(g, 1))
            self._autos[("b", 0, -1)] = Automorphism(g, beta_twist_images(g, -1))
        # y = t_alpha_{g-1} . u_{g-1}  (u applied first)
        y = compose(self._autos[("a", g - 1, 1)], self._autos[("u", g - 1, 1)])
        y_inv = compose(self._autos[("u", g - 1, -1)], self._autos[("a", g - 1, -1)])
        self._autos[("y", 0, 1)] = y
        self._autos[("y", 0, -1)] = y_inv
        # eps = y^-1(alpha_{g-2}); its twist is the conjugate of the
        # alpha_{g-2} twist by y^-1.
        self._autos[("e", 0, 1)] = compose(y_inv, compose(self._autos[("a", g - 2, 1)], y))
        self._autos[("e", 0, -1)] = compose(y_inv, compose(self._autos[("a", g - 2, -1)], y))

        self.curves = {f"a{i}": (i, i + 1) for i in range(1, g)}
        if g >= 4:
            self.curves["b"] = BETA_WORD
        self.curves["e"] = y_inv((g - 2, g - 1))

        # reduced automorphisms of composite words, memoized per catalog;
        # persisted across runs only via the explicit cache-directory flag
        self._eval_cache: dict = {}

    def automorphism(self, symbol) -> Automorphism:
        kind, idx, sign = symbol
        try:
            return self._autos[(kind, idx, sign)]
        except KeyError:
            raise KeyError(f"no generator {symbol} in genus {self.genus}") from None

    def symbols(self):
        """All positive-direction generator symbols in this genus."""
        out = [("a", i, 1) for i in range(1, self.genus)]
        out += [("u", i, 1) for i in range(1, self.genus)]
        if self.genus >= 4:
            out.append(("b", 0, 1))
        out += [("e", 0, 1), ("y", 0, 1)]
        return out


def evaluate(catalog: GeneratorCatalog, word) -> Automorphism:
    """Evaluate a mapping-class word, rightmost symbol applied first."""
    word = tuple(word)
    cached = catalog._eval_cache.get(word)
    if cached is not None:
        return cached
    acc = identity_automorphism(catalog.genus)
    for symbol in reversed(word):
        acc = compose(catalog.automorphism(symbol), acc)
    catalog._eval_cache[word] = acc
    return acc


# ---------------------------------------------------------------------------
# Curves


class CurveClass:
    """Unoriented isotopy-class of a curve: the cyclic word up to
    conjugacy and inversion.  Comparing unoriented absorbs the sign
    ambiguity of conjugating a twist."""

    __slots__ = ("genus", "key")

    def __init__(self, pres: SurfacePresentation, word):
        word = tuple(word)
        self.genus = pres.genus
        self.key = min(cyclic_canonical(pres, word), cyclic_canonical(pres, inverse(word)))

    def __eq__(self, other):
        return (
            isinstance(other, CurveClass)
            and self.genus == other.genus
            and self.key == other.key
        )

    def __hash__(self):
        return hash((self.genus, self.key))

    def __repr__(self):
        return f"CurveClass({format_word(self.key)})"


def curve_class(catalog: GeneratorCatalog, word) -> CurveClass:
    return CurveClass(catalog.presentation, word)


def curve_image(catalog: GeneratorCatalog, word, curve) -> CurveClass:
    """Image of a curve class under a mapping-class word."""
    auto = evaluate(catalog, word)
    raw = curve.key if isinstance(curve, CurveClass) else tuple(curve)
    return CurveClass(catalog.presentation, auto(raw))


def curves_equal(a: CurveClass, b: CurveClass) -> bool:
    return a == b


# ---------------------------------------------------------------------------
# Equality and orders up to inner automorphism


def mcg_equal(catalog: GeneratorCatalog, w1, w2, bound: int = 16):
    """True iff the two mapping-class words define the same mapping class.

    Decided by checking that evaluate(w1) . evaluate(w2)^-1 is inner.
    Returns True, False, or Inconclusive(bound).
    """
    diff = evaluate(catalog, tuple(w1) + inverse_word(w2))
    status = is_inner(catalog.presentation, diff, bound=bound)
    if isinstance(status, Inner):
        return True
    if isinstance(status, NotInner):
        return False
    return status


def order_of(catalog: GeneratorCatalog, word, max_order: int, bound: int = 16):
    """Least n <= max_order with evaluate(word)^n inner.

    The homology matrix gives a cheap necessary condition: an inner power
    must act trivially on H_1, so only multiples of the matrix order are
    tested at the pi_1 level.  Proper divisors of the answer are thereby
    certified to fail.  Returns the order, InfiniteWithinBound(max_order),
    or Inconclusive if a witness search was indecisive.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    from .homology import abelianize, matrix_identity, matrix_mul

    auto = evaluate(catalog, word)
    m = abelianize(auto)
    ident = matrix_identity(catalog.genus - 1)
    acc = m.entries
    matrix_order = None
    for n in range(1, max_order + 1):
        if acc == ident:
            matrix_order = n
            break
        acc = matrix_mul(acc, m.entries)
    if matrix_order is None:
        return InfiniteWithinBound(max_order)

    pres = catalog.presentation
    step = None
    power = identity_automorphism(catalog.genus)
    for n in range(1, max_order + 1):
        power = compose(auto, power)
        if n % matrix_order:
            continue
        status = is_inner(pres, power, bound=bound)
        if isinstance(status, Inner):
            return n
        if isinstance(status, Inconclusive):
            return status
    return InfiniteWithinBound(max_order)


# ---------------------------------------------------------------------------
# Catalog construction with validation


def _relator_certificate(pres: SurfacePresentation, auto: Automorphism) -> bool:
    """Free-group certificate: the image of the relator is freely
    conjugate to the relator or its inverse.  This is what certifies that
    the images define an endomorphism of the surface group induced by a
    homeomorphism candidate."""
    img = free_reduce(
        sum((auto.images[abs(l) - 1] if l > 0 else inverse(auto.images[abs(l) - 1])
             for l in pres.relator), ())
    )
    while len(img) >= 2 and img[0] == -img[-1]:
        img = img[1:-1]
    if len(img) != len(pres.relator):
        return False
    return img in pres.relator_shifts


def build_catalog(genus: int) -> GeneratorCatalog:
    """Build and certify the generator catalog for one genus.

    The validation suite rejects any wrongly derived formula: relator
    certificate for every generator, exact inverse composition, locality,
    braid relations along the chain, commutation of distant twists, and
    homology classes of the stored curve words.  Raises ValidationFailure
    naming the first failed relation.
    """
    catalog = GeneratorCatalog(genus)
    pres = catalog.presentation
    g = genus

    ident = identity_automorphism(g)
    for symbol in catalog.symbols():
        kind, idx, sign = symbol
        auto = catalog.automorphism(symbol)
        if not _relator_certificate(pres, auto):
            raise ValidationFailure(f"relator certificate failed for {symbol}")
        inv = catalog.automorphism((kind, idx, -1))
        if compose(auto, inv) != ident or compose(inv, auto) != ident:
            raise ValidationFailure(f"stored inverse wrong for {symbol}")

    for i in range(1, g):
        auto = catalog.automorphism(("a", i, 1))
        for j in range(1, g + 1):
            if j not in (i, i + 1) and auto.images[j - 1] != (j,):
                raise ValidationFailure(f"t_a{i} moves x{j}")
        auto = catalog.automorphism(("u", i, 1))
        for j in range(1, g + 1):
            if j not in (i, i + 1) and auto.images[j - 1] != (j,):
                raise ValidationFailure(f"u{i} moves x{j}")
    if g >= 4:
        auto = catalog.automorphism(("b", 0, 1))
        for j in range(5, g + 1):
            if auto.images[j - 1] != (j,):
                raise ValidationFailure(f"t_b moves x{j}")

    for i in range(1, g - 1):
        a = catalog.automorphism(("a", i, 1))
        b = catalog.automorphism(("a", i + 1, 1))
        if compose(a, compose(b, a)) != compose(b, compose(a, b)):
            raise ValidationFailure(f"braid relation failed for t_a{i}, t_a{i+1}")
    for i in range(1, g):
        for j in range(i + 2, g):
            a = catalog.automorphism(("a", i, 1))
            b = catalog.automorphism(("a", j, 1))
            if compose(a, b) != compose(b, a):
                raise ValidationFailure(f"t_a{i} and t_a{j} do not commute")
    if g >= 4:
        tb = catalog.automorphism(("b", 0, 1))
        for i in (1, 2, 3):
            a = catalog.automorphism(("a", i, 1))
            if compose(tb, a) != compose(a, tb):
                raise ValidationFailure(f"t_b and t_a{i} do not commute")

    def reduced(counts):
        return tuple(counts[j] - counts[g - 1] for j in range(g - 1))

    for i in range(1, g):
        vec = pres.abelianized(catalog.curves[f"a{i}"])
        counts = [1 if j + 1 in (i, i + 1) else 0 for j in range(g)]
        if vec != reduced(counts):
            raise ValidationFailure(f"curve word for alpha_{i} abelianizes wrongly")
    if g >= 4:
        vec = pres.abelianized(catalog.curves["b"])
        counts = [1 if j < 4 else 0 for j in range(g)]
        if vec != reduced(counts):
            raise ValidationFailure("curve word for beta abelianizes wrongly")

    return catalog


_CATALOGS: dict = {}


def get_catalog(genus: int) -> GeneratorCatalog:
    """Shared certified catalog per genus."""
    cat = _CATALOGS.get(genus)
    if cat is None:
        cat = _CATALOGS[genus] = build_catalog(genus)
    return cat
