"""Addresses, levels and complete antichains of the rooted trees T_{d,k}.

The tree T_{d,k} has a root with k children while every other vertex has d
children.  A vertex is addressed by its label path from the root: the first
label lies in {0..k-1}, all later ones in {0..d-1}, and the root is the empty
path.  Addresses are plain tuples of ints; their text form is the digit
string (root = "").  The boundary ball below an address a is written B^a.

Counting conventions used throughout the package:
    level_count(n)             = k * d**(n-1)  for n >= 1, and 1 for n = 0,
    ball_automorphism_count(n) = k! * prod_{i=1}^{n-1} (d!)**(k * d**(i-1)),
the latter being the order of the automorphism group of the depth-n ball and
also the index of the level-n principal congruence subgroup in the full
rooted automorphism group (finite ball automorphisms extend rigidly).
"""

import math
from fractions import Fraction

from .errors import DomainError, ParseError


class TreeShape:
    """The pair (d, k): d children per non-root vertex, k at the root."""

    __slots__ = ("d", "k")

    def __init__(self, d, k):
        if d < 2 or k < 2:
            raise DomainError("tree shape requires d >= 2 and k >= 2")
        self.d = d
        self.k = k

    def arity(self, address):
        """Number of children of the vertex at `address`."""
        return self.k if len(address) == 0 else self.d

    def validate_address(self, address):
        if len(address) == 0:
            return
        if not 0 <= address[0] < self.k:
            raise DomainError("first label %r out of range for k=%d" % (address[0], self.k))
        for lab in address[1:]:
            if not 0 <= lab < self.d:
                raise DomainError("label %r out of range for d=%d" % (lab, self.d))

    def __eq__(self, other):
        return isinstance(other, TreeShape) and (self.d, self.k) == (other.d, other.k)

    def __hash__(self):
        return hash((self.d, self.k))

    def __repr__(self):
        return "TreeShape(d=%d, k=%d)" % (self.d, self.k)


def parse_address(text, shape=None):
    """Digit-string address to tuple; "" is the root."""
    text = text.strip()
    addr = []
    for i, ch in enumerate(text):
        if not ch.isdigit():
            raise ParseError("bad address character %r" % ch, i)
        addr.append(int(ch))
    addr = tuple(addr)
    if shape is not None:
        if shape.d > 10 or shape.k > 10:
            raise ParseError("digit-string addresses require d <= 10 and k <= 10")
        shape.validate_address(addr)
    return addr


def format_address(address):
    return "".join(str(lab) for lab in address)


def is_prefix(a, b):
    """True when a is an ancestor of b or equal to it."""
    return len(a) <= len(b) and b[: len(a)] == a


def level_count(shape, n):
    """Number of height-n vertices."""
    if n < 0:
        raise DomainError("level must be nonnegative")
    if n == 0:
        return 1
    return shape.k * shape.d ** (n - 1)


def level_addresses(shape, n):
    """All height-n addresses in lexicographic order."""
    if n < 0:
        raise DomainError("level must be nonnegative")
    out = [()]
    for height in range(1, n + 1):
        arity = shape.k if height == 1 else shape.d
        out = [a + (i,) for a in out for i in range(arity)]
    return out


def ball_automorphism_count(shape, n):
    """Order of the automorphism group of the depth-n ball (1 for n = 0)."""
    if n < 0:
        raise DomainError("level must be nonnegative")
    if n == 0:
        return 1
    total = math.factorial(shape.k)
    fact_d = math.factorial(shape.d)
    for i in range(1, n):
        total *= fact_d ** (shape.k * shape.d ** (i - 1))
    return total


def boundary_measure(shape, address):
    """Visual measure of the boundary ball below `address` (whole boundary = 1)."""
    h = len(address)
    if h == 0:
        return Fraction(1)
    return Fraction(1, level_count(shape, h))


class CompleteAntichain:
    """A finite leaf set whose boundary balls partition the whole boundary."""

    __slots__ = ("shape", "leaves")

    def __init__(self, shape, leaves):
        leaves = tuple(sorted(set(map(tuple, leaves))))
        if not leaves:
            raise DomainError("antichain must be nonempty")
        total = Fraction(0)
        for a in leaves:
            shape.validate_address(a)
            total += boundary_measure(shape, a)
        for i in range(len(leaves) - 1):
            if is_prefix(leaves[i], leaves[i + 1]):
                raise DomainError("antichain leaves %r and %r are comparable" % (leaves[i], leaves[i + 1]))
        # prefix-free plus total measure one is equivalent to completeness
        if total != 1:
            raise DomainError("leaf balls do not partition the boundary (measure %s)" % total)
        self.shape = shape
        self.leaves = leaves

    @classmethod
    def root(cls, shape):
        return cls(shape, [()])

    @classmethod
    def level(cls, shape, n):
        return cls(shape, level_addresses(shape, n))

    def __len__(self):
        return len(self.leaves)

    def __iter__(self):
        return iter(self.leaves)

    def __contains__(self, address):
        return tuple(address) in set(self.leaves)

    def __eq__(self, other):
        return (
            isinstance(other, CompleteAntichain)
            and self.shape == other.shape
            and self.leaves == other.leaves
        )

    def __hash__(self):
        return hash((self.shape, self.leaves))

    def __repr__(self):
        return "CompleteAntichain(%r)" % (["".join(map(str, a)) for a in self.leaves],)


def expand_leaf(shape, leaves, target_leaf):
    """Replace one leaf by all of its children; returns a new sorted tuple."""
    target_leaf = tuple(target_leaf)
    if target_leaf not in leaves:
        raise DomainError("cannot expand %r: not a leaf" % (target_leaf,))
    arity = shape.arity(target_leaf)
    out = [a for a in leaves if a != target_leaf]
    out.extend(target_leaf + (i,) for i in range(arity))
    return tuple(sorted(out))


def refine(antichain, targets):
    """Minimal refinement making every target a union of leaf balls.

    A target already at or above a leaf needs nothing; a target strictly
    below a leaf forces repeated expansion of that leaf.
    """
    shape = antichain.shape
    for t in targets:
        shape.validate_address(tuple(t))
    leaves = antichain.leaves
    pending = sorted(set(map(tuple, targets)))
    while pending:
        t = pending.pop()
        blocker = None
        for a in leaves:
            if len(a) < len(t) and is_prefix(a, t):
                blocker = a
                break
        if blocker is None:
            continue
        leaves = expand_leaf(shape, leaves, blocker)
        pending.append(t)
    return CompleteAntichain(shape, leaves)
