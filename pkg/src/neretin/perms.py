"""Permutations of {0..n-1} stored as tuples, plus cycle-notation text forms.

A permutation p maps i to p[i].  Composition follows the function convention:
compose(p, q) applies q first.
"""

from .errors import ParseError


def identity(n):
    return tuple(range(n))


def compose(p, q):
    """p after q: compose(p, q)[i] = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_identity(p):
    return all(i == v for i, v in enumerate(p))


def is_permutation(p, n):
    return len(p) == n and sorted(p) == list(range(n))


def all_permutations(n):
    """All permutations of {0..n-1} in lexicographic order."""
    import itertools

    return itertools.permutations(range(n))


def parse_cycles(text, degree, base=0):
    """Parse cycle notation like "(0 1)(2 3)" into a permutation tuple.

    Labels are integers minus `base` (base=1 for the classical 1-based
    convention).  "()" and the empty string denote the identity.
    """
    s = text.strip()
    out = list(range(degree))
    seen = set()
    pos = 0
    if s == "":
        return tuple(out)
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if s[pos] != "(":
            raise ParseError("expected '(' in cycle notation %r" % text, pos)
        end = s.find(")", pos)
        if end < 0:
            raise ParseError("unclosed cycle in %r" % text, pos)
        body = s[pos + 1 : end].replace(",", " ").split()
        cycle = []
        for tok in body:
            try:
                v = int(tok) - base
            except ValueError:
                raise ParseError("bad label %r in cycle notation" % tok, pos) from None
            if not 0 <= v < degree:
                raise ParseError("label %r out of range for degree %d" % (tok, degree), pos)
            if v in seen:
                raise ParseError("label %r repeated in cycle notation" % tok, pos)
            seen.add(v)
            cycle.append(v)
        for i, v in enumerate(cycle):
            out[v] = cycle[(i + 1) % len(cycle)]
        pos = end + 1
    return tuple(out)


def format_cycles(p, base=0):
    """Inverse of parse_cycles; fixed points are omitted, identity is "()"."""
    n = len(p)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = p[v]
        parts.append("(" + " ".join(str(x + base) for x in cycle) + ")")
    return "".join(parts) if parts else "()"
