"""Symbolic replay of the four-holed-sphere twist derivation.

A small term rewriter over an alphabet of twist symbols and abstract
mapping classes.  Words are freely reduced sequences of signed atoms; a
rule set consists of two-sided rewrite rules (the lantern-type relation,
the commutations between boundary twists and everything else, and the
conjugation hypotheses on the abstract classes f, g, h).

:func:`verify_step` decides joinability of two expressions by a
bidirectional breadth-first search over rule applications, memoized on
reduced forms, within a node budget and a word-length cap.  Exhausting the
budget raises BudgetExceeded (inconclusive); exhausting the bounded search
space returns False.

:func:`verify_lemma1` replays the derivation that writes the first
boundary twist as a product of f, g, h, a conjugate of f, and inverses:
the relation is rearranged into three difference blocks, the hypotheses on
g and h replace two blocks by conjugates of the first, and the hypothesis
on f rewrites the remaining interior twist.  Removing any single
hypothesis must break the chain; the test suite checks exactly that.
"""

from __future__ import annotations

from collections import deque
from importlib import resources

from .errors import BudgetExceeded

ATOMS = ("ta1", "tb", "tg", "ta5", "ta3", "td1", "td2", "f", "g", "h")

# An expression is a tuple of (atom, +-1) pairs, freely reduced.


def reduce_expr(expr) -> tuple:
    out = []
    for atom, sign in expr:
        if out and out[-1][0] == atom and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((atom, sign))
    return tuple(out)


def invert_expr(expr) -> tuple:
    return tuple((atom, -sign) for atom, sign in reversed(expr))


def parse_expr(text: str) -> tuple:
    """Parse ``"ta3 ta5^-1 g"`` into an expression."""
    out = []
    for token in text.split():
        if token.endswith("^-1"):
            name, sign = token[:-3], -1
        else:
            name, sign = token, 1
        if name not in ATOMS:
            raise ValueError(f"unknown atom {name!r}")
        out.append((name, sign))
    return reduce_expr(out)


def format_expr(expr) -> str:
    if not expr:
        return "1"
    return " ".join(a if s > 0 else f"{a}^-1" for a, s in expr)


class RuleSet:
    """Two-sided rewrite rules plus mechanically generated variants.

    Every rule L -> R yields L^-1 -> R^-1; commutations (ab -> ba) yield
    all sign combinations; conjugation rules (c X c^-1 -> Y) also yield
    the flipped form c^-1 Y c -> X and the inverted exponents.  All
    variants are consequences of the originals, added so that the short
    derivations are reachable without inventing insertion moves.
    """

    def __init__(self, rules):
        base = [(reduce_expr(l), reduce_expr(r)) for l, r in rules]
        self.base_rules = tuple(base)
        seen = set()
        expanded = []

        def add(l, r):
            l, r = reduce_expr(l), reduce_expr(r)
            for a, b in ((l, r), (r, l)):
                if a and (a, b) not in seen and a != b:
                    seen.add((a, b))
                    expanded.append((a, b))

        for l, r in base:
            add(l, r)
            add(invert_expr(l), invert_expr(r))
            if len(l) == 2 and len(r) == 2 and l[0] == r[1] and l[1] == r[0]:
                (a, sa), (b, sb) = l
                for fa in (1, -1):
                    for fb in (1, -1):
                        add(((a, sa * fa), (b, sb * fb)), ((b, sb * fb), (a, sa * fa)))
            if len(l) == 3 and len(r) == 1 and l[0][0] == l[2][0] and l[0][1] == -l[2][1]:
                c, x, ci = l
                y = r[0]
                add((c, (x[0], -x[1]), ci), ((y[0], -y[1]),))
                add((ci, y, c), (x,))
                add((ci, (y[0], -y[1]), c), ((x[0], -x[1]),))
        self.rules = tuple(expanded)

    def without(self, lhs_text: str) -> "RuleSet":
        """Copy of this rule set with one base rule removed (ablation)."""
        target = parse_expr(lhs_text)
        kept = [(l, r) for l, r in self.base_rules if l != target]
        if len(kept) == len(self.base_rules):
            raise ValueError(f"no base rule with left side {lhs_text!r}")
        return RuleSet(kept)


def parse_rules(text: str) -> RuleSet:
    rules = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, arrow, rhs = line.partition("->")
        if not arrow:
            raise ValueError(f"rule line without '->': {line!r}")
        rules.append((parse_expr(lhs), parse_expr(rhs)))
    return RuleSet(rules)


def load_rules(path=None) -> RuleSet:
    """Load a rule file; defaults to the canonical shipped rules."""
    if path is None:
        text = resources.files("mcgverify.data").joinpath("lantern_rules.txt").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_rules(text)


def canonical_rules() -> RuleSet:
    return load_rules()


def _neighbors(rules: RuleSet, expr, max_len: int):
    for lhs, rhs in rules.rules:
        ln = len(lhs)
        if ln > len(expr):
            continue
        limit = len(expr) - ln
        for i in range(limit + 1):
            if expr[i : i + ln] == lhs:
                new = reduce_expr(expr[:i] + rhs + expr[i + ln :])
                if len(new) <= max_len:
                    yield new


def verify_step(rules: RuleSet, lhs, rhs, budget: int = 100_000, max_len: int = None) -> bool:
    """True iff lhs and rhs are joinable under the rules and free
    reduction.  Bidirectional BFS; symmetric in lhs/rhs.  Raises
    BudgetExceeded after ``budget`` node expansions."""
    start = reduce_expr(lhs)
    goal = reduce_expr(rhs)
    if start == goal:
        return True
    if max_len is None:
        # the replayed derivation never overshoots its endpoints by more
        # than one insertion; slack 4 keeps failing searches exhaustible
        max_len = max(len(start), len(goal)) + 4
    sides = [
        ({start: None}, deque([start])),
        ({goal: None}, deque([goal])),
    ]
    expansions = 0
    while sides[0][1] or sides[1][1]:
        # expand the smaller active frontier first
        order = sorted((s for s in sides if s[1]), key=lambda s: len(s[1]))
        seen, queue = order[0]
        other_seen = sides[1][0] if seen is sides[0][0] else sides[0][0]
        current = queue.popleft()
        expansions += 1
        if expansions > budget:
            raise BudgetExceeded(f"joinability search exceeded {budget} expansions")
        for new in _neighbors(rules, current, max_len):
            if new in other_seen:
                return True
            if new not in seen:
                seen[new] = current
                queue.append(new)
    return False


# The derivation steps, as flat expressions.
STEP_TARGET = parse_expr("ta1")
STEP_BLOCKS = parse_expr("ta3 ta5^-1 td1 tg^-1 td2 tb^-1")
STEP_GH = parse_expr(
    "ta3 ta5^-1 g^-1 ta3 ta5^-1 g h^-1 ta3 ta5^-1 h"
)
STEP_F = parse_expr(
    "f^-1 ta5 f ta5^-1 g^-1 f^-1 ta5 f ta5^-1 g h^-1 f^-1 ta5 f ta5^-1 h"
)
# The final product of conjugated f^-1 (ta5 f ta5^-1) blocks; as a flat
# word the regrouping is pure associativity, and the check certifies that.
STEP_FINAL = parse_expr(
    "f^-1 ta5 f ta5^-1 "
    "g^-1 f^-1 ta5 f ta5^-1 g "
    "h^-1 f^-1 ta5 f ta5^-1 h"
)

DERIVATION_CHAIN = (STEP_TARGET, STEP_BLOCKS, STEP_GH, STEP_F, STEP_FINAL)


def verify_lemma1(rules: RuleSet, budget: int = 100_000) -> bool:
    """Replay the full derivation: the relation rearranged into difference
    blocks, the g/h hypotheses substituted, the f hypothesis substituted,
    and the regrouped final product checked against the previous form.
    Each consecutive pair is verified by the bounded joinability search;
    joinability is symmetric and transitive, so the verified chain equates
    the final form with the original twist.  True only if every step
    verifies."""
    pairs = zip(DERIVATION_CHAIN, DERIVATION_CHAIN[1:])
    return all(verify_step(rules, a, b, budget=budget) for a, b in pairs)


def reversed_lantern_rules() -> RuleSet:
    """Ablation: the relation with its right-hand side reversed, which is
    not equivalent under the commutations the rule set carries."""
    rules = [(l, r) for l, r in canonical_rules().base_rules]
    out = []
    for l, r in rules:
        if l == parse_expr("ta1 tb tg ta5"):
            out.append((l, tuple(reversed(r))))
        else:
            out.append((l, r))
    return RuleSet(out)
