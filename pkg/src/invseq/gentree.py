"""Generating-tree counters for the 14 avoidance classes.

Each class has a succession rule: a root label, an expansion map sending a
label at depth n to a multiset of labels at depth n+1, and a predicate
selecting which labels correspond to counted objects (some trees carry
phantom labels that must be excluded).  Counting is dynamic programming on
the label census per depth, which is polynomial-time in contrast to the
exponential oracle.

Every rule carries two implementations: ``expand``, a direct transcription
of the succession rule used as the reference semantics, and a vectorised
census stepper using prefix/suffix-sum aggregation so that computing a few
hundred terms stays cheap.  The test-suite checks the two agree, and that
both agree with the brute-force oracle.

Label conventions: right-grown rules track statistics of the sequence end
(``a``/``b``/``c``/``d``/``e`` progression for the 1176 family,
maximum/premaximum ``s``/``t`` for 830, maximum/valid-descents ``p``/``q``
for 2106); labels that depend on the length carry it redundantly and the
stepper asserts it equals the tree depth.  Left-grown rules track the
leading runs of zeros (p, s) or the prefix plus remaining commitments
(p, c).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .combinat import catalan, multiplicity_m, multiplicity_w
from .core import PatternSet, RelationTriple


class ClassId(enum.Enum):
    """The 14 previously-uncounted triple-of-relations classes.

    The value is the index used in the Martinez-Savage tables; it equals
    I_7 of the class, the first term distinguishing all classes.
    """

    C214 = "214"
    C247 = "247"
    C663A = "663A"
    C733 = "733"
    C759 = "759"
    C830 = "830"
    C1016 = "1016"
    C1176 = "1176"
    C1253 = "1253"
    C1420 = "1420"
    C1509 = "1509"
    C1833A = "1833A"
    C1953A = "1953A"
    C2106 = "2106"

    @property
    def triple(self) -> RelationTriple:
        return RelationTriple.parse(_CLASS_TRIPLES[self])

    @property
    def patterns(self) -> PatternSet:
        return PatternSet.of(*_CLASS_PATTERNS[self])

    @property
    def i7(self) -> int:
        return int(self.value.rstrip("AB"))

    @classmethod
    def parse(cls, text: str) -> "ClassId":
        text = text.strip().upper()
        for c in cls:
            if c.value == text:
                return c
        raise ValueError(f"unknown class: {text!r}")


_CLASS_TRIPLES = {
    ClassId.C214: "-,>=,>=",
    ClassId.C247: "<=,-,>=",
    ClassId.C663A: "-,!=,>=",
    ClassId.C733: "!=,!=,>=",
    ClassId.C759: "<=,!=,>=",
    ClassId.C830: "!=,>,>=",
    ClassId.C1016: ">,-,!=",
    ClassId.C1176: ">,<=,!=",
    ClassId.C1253: ">,!=,!=",
    ClassId.C1420: "-,-,>",
    ClassId.C1509: "-,>=,>",
    ClassId.C1833A: "-,!=,>",
    ClassId.C1953A: "-,>,>",
    ClassId.C2106: ">,<=,>=",
}

_CLASS_PATTERNS = {
    ClassId.C214: ("000", "010", "100", "110", "120", "210"),
    ClassId.C247: ("000", "010", "110", "120"),
    ClassId.C663A: ("010", "101", "110", "120", "201", "210"),
    ClassId.C733: ("010", "101", "120", "201", "210"),
    ClassId.C759: ("010", "110", "120"),
    ClassId.C830: ("010", "120", "210"),
    ClassId.C1016: ("100", "102", "201", "210"),
    ClassId.C1176: ("100", "102", "201"),
    ClassId.C1253: ("102", "201", "210"),
    ClassId.C1420: ("100", "110", "120", "201", "210"),
    ClassId.C1509: ("100", "110", "120", "210"),
    ClassId.C1833A: ("110", "120", "201", "210"),
    ClassId.C1953A: ("110", "120", "210"),
    ClassId.C2106: ("100", "101", "201"),
}

# Pattern sets of the Wilf-equivalent partner classes (no succession rule
# here; enumerable through the oracle).
WILF_PARTNER_PATTERNS = {
    ClassId.C663A: ("010", "100", "101", "120", "201", "210"),  # 663B
    ClassId.C1833A: ("100", "120", "201", "210"),  # 1833B
    ClassId.C1953A: ("100", "120", "210"),  # 1953B
}


class Label(NamedTuple):
    tag: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"({inner}){'_' + self.tag if self.tag else ''}"


@dataclass
class LevelState:
    depth: int
    census: dict[Label, int]


class RuleError(RuntimeError):
    """An expansion produced an invalid label: a rule-transcription bug."""


class SuccessionRule:
    """Base: census stepping via ``expand``; subclasses may add a fast path."""

    class_id: ClassId

    def root(self) -> Label:
        raise NotImplementedError

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        raise NotImplementedError

    def counted(self, label: Label) -> bool:
        raise NotImplementedError

    # -- fast path; default delegates to expand on plain census dicts --

    def initial_state(self):
        return {self.root(): 1}

    def step_state(self, state, depth: int):
        new: dict[Label, int] = {}
        for label, cnt in state.items():
            for child, mult in self.expand(label, depth):
                if mult < 1:
                    raise RuleError(f"{self.class_id}: bad multiplicity for {child}")
                new[child] = new.get(child, 0) + cnt * mult
        return new

    def census_from_state(self, state, depth: int) -> dict[Label, int]:
        return dict(state)

    def counted_total(self, state, depth: int) -> int:
        return sum(cnt for label, cnt in state.items() if self.counted(label))


def step(rule: SuccessionRule, state: LevelState) -> LevelState:
    """One generic census update: child count = sum of parent * multiplicity."""
    new: dict[Label, int] = {}
    for label, cnt in state.census.items():
        for child, mult in rule.expand(label, state.depth):
            new[child] = new.get(child, 0) + cnt * mult
    return LevelState(state.depth + 1, new)


def _check_depth(label: Label, depth: int) -> None:
    if label.params[0] != depth:
        raise RuleError(f"label {label} at depth {depth}: stored length disagrees")


# ---------------------------------------------------------------------------
# Right-grown rules
# ---------------------------------------------------------------------------


class _Rule1176Family(SuccessionRule):
    """Classes 1176, 1253 and 1016 share the a/b skeleton.

    Tag a: non-decreasing, ending on h (label carries the length).
    Tags b, c, d track how much of a 101 pattern (max, premax, max) has
    occurred; tag e covers the strictly-descending (or single-value) tail.
    b and c label phantom objects and are never counted.
    """

    variant: str  # "1176" | "1253" | "1016"

    def root(self) -> Label:
        return Label("a", (0, 0))

    def counted(self, label: Label) -> bool:
        return label.tag in ("a", "d", "e")

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        tag = label.tag
        v = self.variant
        if tag == "a":
            _check_depth(label, depth)
            n, h = label.params
            for i in range(h, n + 1):
                yield Label("a", (n + 1, i)), 1
            for i in range(h, n):
                yield Label("b", (i,)), n - i
            for i in range(h):
                yield Label("e", (i,)), 1
        elif tag == "b":
            yield Label("b", label.params), 1
            yield Label("c", label.params), 1
        elif tag == "c":
            if v == "1253":
                yield Label("c", label.params), 1
            yield Label("d", label.params), 1
        elif tag == "d":
            if v == "1253":
                yield Label("d", label.params), 2
            else:
                yield Label("d", label.params), 1
            if v == "1176":
                (k,) = label.params
                for i in range(k):
                    yield Label("e", (i,)), 1
        elif tag == "e":
            (ell,) = label.params
            if v == "1176":
                for i in range(ell):
                    yield Label("e", (i,)), 1
            elif v == "1253":
                yield Label("e", (ell,)), 1
            # 1016: e-labels are leaves
        else:
            raise RuleError(f"unknown tag {tag!r}")

    # fast path: five coefficient lists indexed by the label parameter

    def initial_state(self):
        return ([1], [0], [0], [0], [0])

    def step_state(self, state, depth: int):
        n = depth
        a, b, c, d, e = state
        size = n + 2
        v = self.variant

        pref_a = [0] * size  # sum_{h <= i} a[h]
        run = 0
        for i in range(size):
            if i < len(a):
                run += a[i]
            pref_a[i] = run

        new_a = [pref_a[i] if i <= n else 0 for i in range(size)]

        new_b = [0] * size
        for k in range(size):
            if k < len(b):
                new_b[k] += b[k]
            if k < n:
                new_b[k] += (n - k) * pref_a[k]

        new_c = [0] * size
        for k in range(size):
            bk = b[k] if k < len(b) else 0
            ck = c[k] if k < len(c) else 0
            new_c[k] = ck + bk if v == "1253" else bk

        new_d = [0] * size
        for k in range(size):
            ck = c[k] if k < len(c) else 0
            dk = d[k] if k < len(d) else 0
            new_d[k] = 2 * dk + ck if v == "1253" else dk + ck

        new_e = [0] * size
        if v == "1176":
            suf = 0  # sum over larger indices of a + d + e
            for i in range(size - 1, -1, -1):
                new_e[i] = suf
                suf += (a[i] if i < len(a) else 0) + (d[i] if i < len(d) else 0) + (
                    e[i] if i < len(e) else 0
                )
        else:
            suf_a = 0
            for i in range(size - 1, -1, -1):
                new_e[i] = suf_a + (e[i] if v == "1253" and i < len(e) else 0)
                suf_a += a[i] if i < len(a) else 0

        return (new_a, new_b, new_c, new_d, new_e)

    def census_from_state(self, state, depth: int) -> dict[Label, int]:
        a, b, c, d, e = state
        out: dict[Label, int] = {}
        for h, cnt in enumerate(a):
            if cnt:
                out[Label("a", (depth, h))] = cnt
        for tag, arr in (("b", b), ("c", c), ("d", d), ("e", e)):
            for k, cnt in enumerate(arr):
                if cnt:
                    out[Label(tag, (k,))] = cnt
        return out

    def counted_total(self, state, depth: int) -> int:
        a, b, c, d, e = state
        return sum(a) + sum(d) + sum(e)


class Rule1176(_Rule1176Family):
    class_id = ClassId.C1176
    variant = "1176"


class Rule1253(_Rule1176Family):
    class_id = ClassId.C1253
    variant = "1253"


class Rule1016(_Rule1176Family):
    class_id = ClassId.C1016
    variant = "1016"


class Rule830(SuccessionRule):
    """Tracks (length, maximum h, premaximum k); tag s ends on the maximum,
    tag t on the premaximum.  All-zero sequences take k = 0."""

    class_id = ClassId.C830

    def root(self) -> Label:
        return Label("s", (0, 0, 0))

    def counted(self, label: Label) -> bool:
        return True

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        _check_depth(label, depth)
        n, h, k = label.params
        yield Label("s", (n + 1, h, k)), 1
        for i in range(h + 1, n + 1):
            yield Label("s", (n + 1, i, h)), 1
        if label.tag == "s":
            if h > 0:
                for i in range(k + 1, h):
                    yield Label("t", (n + 1, h, i)), 1
        elif label.tag == "t":
            for i in range(k, h):
                yield Label("t", (n + 1, h, i)), 1
        else:
            raise RuleError(f"unknown tag {label.tag!r}")

    def initial_state(self):
        return ([[1]], [[0]])

    def step_state(self, state, depth: int):
        n = depth
        s, t = state
        size = n + 2
        new_s = [[0] * size for _ in range(size)]
        new_t = [[0] * size for _ in range(size)]
        for h in range(min(len(s), size)):
            row_s = s[h]
            row_t = t[h]
            u = 0  # total mass at maximum h
            for k in range(len(row_s)):
                m = row_s[k] + row_t[k]
                if m:
                    new_s[h][k] += m
                    u += m
            if u:
                for i in range(h + 1, n + 1):
                    new_s[i][h] += u
            # t-children: from s rows need k < i, from t rows k <= i; i < h
            pref_s = 0
            pref_t = 0
            for i in range(h):
                if i < len(row_t):
                    pref_t += row_t[i]
                v = pref_s + pref_t
                if v:
                    new_t[h][i] += v
                if i < len(row_s):
                    pref_s += row_s[i]
        return (new_s, new_t)

    def census_from_state(self, state, depth: int) -> dict[Label, int]:
        out: dict[Label, int] = {}
        for tag, grid in zip("st", state):
            for h, row in enumerate(grid):
                for k, cnt in enumerate(row):
                    if cnt:
                        out[Label(tag, (depth, h, k))] = cnt
        return out

    def counted_total(self, state, depth: int) -> int:
        return sum(sum(row) for grid in state for row in grid)


class Rule2106(SuccessionRule):
    """Tracks (length, maximum h, number k of still-valid descent values);
    tag p ends on the maximum, tag q strictly below it."""

    class_id = ClassId.C2106

    def root(self) -> Label:
        return Label("p", (0, 0, 0))

    def counted(self, label: Label) -> bool:
        return True

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        _check_depth(label, depth)
        n, h, k = label.params
        if label.tag == "p":
            for i in range(h, n + 1):
                yield Label("p", (n + 1, i, k + i - h)), 1
        elif label.tag == "q":
            for i in range(h + 1, n + 1):
                yield Label("p", (n + 1, i, k + i - h - 1)), 1
        else:
            raise RuleError(f"unknown tag {label.tag!r}")
        for i in range(k):
            yield Label("q", (n + 1, h, i)), 1

    def initial_state(self):
        return ([[1]], [[0]])

    def step_state(self, state, depth: int):
        n = depth
        p, q = state
        size = n + 2
        new_p = [[0] * size for _ in range(size)]
        new_q = [[0] * size for _ in range(size)]
        # p-children along diagonals of constant k - h
        for delta in range(-n - 1, 1):
            run = 0
            for i in range(n + 1):
                j = i + delta
                if 0 <= j and i < len(p) and j < len(p[i]):
                    run += p[i][j]
                if 0 <= j and run:
                    new_p[i][j] += run
                jq = i + delta + 1
                if 0 <= jq and i < len(q) and jq < len(q[i]):
                    run += q[i][jq]
        # q-children: suffix sums per maximum h
        for h in range(min(len(p), size)):
            row = [
                (p[h][k] if k < len(p[h]) else 0) + (q[h][k] if k < len(q[h]) else 0)
                for k in range(max(len(p[h]), len(q[h])))
            ]
            suf = 0
            for i in range(len(row) - 1, -1, -1):
                suf_excl = suf  # mass with k > i
                suf += row[i]
                if suf_excl:
                    new_q[h][i] += suf_excl
        return (new_p, new_q)

    def census_from_state(self, state, depth: int) -> dict[Label, int]:
        out: dict[Label, int] = {}
        for tag, grid in zip("pq", state):
            for h, row in enumerate(grid):
                for k, cnt in enumerate(row):
                    if cnt:
                        out[Label(tag, (depth, h, k))] = cnt
        return out

    def counted_total(self, state, depth: int) -> int:
        return sum(sum(row) for grid in state for row in grid)


# ---------------------------------------------------------------------------
# Left-grown rules: labels track the runs of zeros (or commitments)
# ---------------------------------------------------------------------------


class _LeftGrownRule(SuccessionRule):
    """Common fast-path plumbing for rules whose labels are integer pairs."""

    def root(self) -> Label:
        return Label("", (0, 0))

    def initial_state(self):
        return [[1]]

    def census_from_state(self, state, depth: int) -> dict[Label, int]:
        out: dict[Label, int] = {}
        for p, row in enumerate(state):
            for s, cnt in enumerate(row):
                if cnt:
                    out[Label("", (p, s))] = cnt
        return out

    def counted_total(self, state, depth: int) -> int:
        return sum(
            cnt
            for p, row in enumerate(state)
            for s, cnt in enumerate(row)
            if cnt and self.counted(Label("", (p, s)))
        )

    @staticmethod
    def _grid(state, size):
        g = [[0] * size for _ in range(size)]
        for p, row in enumerate(state):
            for s, cnt in enumerate(row):
                if cnt:
                    g[p][s] = cnt
        return g


class Rule1833A(_LeftGrownRule):
    """(p, s) = lengths of the two runs of zeros; every label is counted."""

    class_id = ClassId.C1833A

    def counted(self, label: Label) -> bool:
        return True

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        p, s = label.params
        yield Label("", (p + 1, s)), 1
        if s > 0:
            yield Label("", (p + 1, 0)), 1
        for ell in range(p):
            for k in range(ell + 1):
                yield Label("", (p - ell, k)), 1

    def step_state(self, state, depth: int):
        size = depth + 2
        new = [[0] * size for _ in range(size)]
        tot = [0] * (size + 1)
        for p, row in enumerate(state):
            t = 0
            for s, cnt in enumerate(row):
                if cnt:
                    new[p + 1][s] += cnt
                    t += cnt
            tot[p] = t
            extra = t - (row[0] if row else 0)  # mass with s > 0
            if extra:
                new[p + 1][0] += extra
        suf = [0] * (size + 2)
        for j in range(size - 1, -1, -1):
            suf[j] = suf[j + 1] + tot[j]
        for p2 in range(1, size):
            for k in range(size - p2):
                v = suf[p2 + k]
                if not v:
                    break
                new[p2][k] += v
        return new


class Rule733(_LeftGrownRule):
    """As 1833A, but zeros in the prefix may only move when the suffix run
    is exhausted (s = 0); counted labels have s = 0."""

    class_id = ClassId.C733

    def counted(self, label: Label) -> bool:
        return label.params[1] == 0

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        p, s = label.params
        yield Label("", (p + 1, s)), 1
        if s > 0:
            yield Label("", (p + 1, 0)), 1
        if s == 0:
            for ell in range(p):
                for k in range(ell + 1):
                    yield Label("", (p - ell, k)), 1

    def step_state(self, state, depth: int):
        size = depth + 2
        new = [[0] * size for _ in range(size)]
        c0 = [0] * (size + 1)
        for p, row in enumerate(state):
            t = 0
            for s, cnt in enumerate(row):
                if cnt:
                    new[p + 1][s] += cnt
                    t += cnt
            if row:
                c0[p] = row[0]
            extra = t - c0[p]
            if extra:
                new[p + 1][0] += extra
        suf = [0] * (size + 2)
        for j in range(size - 1, -1, -1):
            suf[j] = suf[j + 1] + c0[j]
        for p2 in range(1, size):
            for k in range(size - p2):
                v = suf[p2 + k]
                if not v:
                    break
                new[p2][k] += v
        return new


class Rule214(_LeftGrownRule):
    class_id = ClassId.C214

    def counted(self, label: Label) -> bool:
        p, s = label.params
        return s == 0 and p <= 2

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        p, s = label.params
        yield Label("", (p + 1, s)), 1
        if s > 0:
            yield Label("", (p + 1, s - 1)), 1
        if s == 0:
            for ell in range(p):
                yield Label("", (p - ell, ell)), 1
            for ell in range(p - 1):
                yield Label("", (p - ell - 1, ell)), 1

    def step_state(self, state, depth: int):
        size = depth + 2
        new = [[0] * size for _ in range(size)]
        c0 = [0] * (size + 2)
        for p, row in enumerate(state):
            for s, cnt in enumerate(row):
                if cnt:
                    new[p + 1][s] += cnt
                    if s > 0:
                        new[p + 1][s - 1] += cnt
            if row:
                c0[p] = row[0]
        for p2 in range(1, size):
            for ell in range(size - p2):
                v = c0[p2 + ell]
                w = c0[p2 + ell + 1] if p2 + ell + 1 < len(c0) else 0
                if v:
                    new[p2][ell] += v
                if w:
                    new[p2][ell] += w
        return new


class Rule1509(_LeftGrownRule):
    class_id = ClassId.C1509

    def counted(self, label: Label) -> bool:
        return label.params[1] <= 1

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        p, s = label.params
        yield Label("", (p + 1, s)), 1
        if s > 0:
            yield Label("", (p + 1, s - 1)), 1
        if s <= 1:
            for i in range(p):
                yield Label("", (p - i, 0)), 1
            for ell in range(1, p):
                for k in range(ell):
                    yield Label("", (p - ell, ell - k)), 1

    def step_state(self, state, depth: int):
        size = depth + 2
        new = [[0] * size for _ in range(size)]
        u = [0] * (size + 1)
        for p, row in enumerate(state):
            for s, cnt in enumerate(row):
                if cnt:
                    new[p + 1][s] += cnt
                    if s > 0:
                        new[p + 1][s - 1] += cnt
            u[p] = (row[0] if row else 0) + (row[1] if len(row) > 1 else 0)
        suf = [0] * (size + 2)
        for j in range(size - 1, -1, -1):
            suf[j] = suf[j + 1] + u[j]
        for p2 in range(1, size):
            if suf[p2]:
                new[p2][0] += suf[p2]
            for s2 in range(1, size - p2):
                v = suf[p2 + s2]
                if not v:
                    break
                new[p2][s2] += v
        return new


class Rule1953A(_LeftGrownRule):
    class_id = ClassId.C1953A

    def counted(self, label: Label) -> bool:
        return True

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        p, s = label.params
        for i in range(s + 1):
            yield Label("", (p + 1, s - i)), 1
        for ell in range(1, p + 1):
            for k in range(ell):
                yield Label("", (p + 1 - ell, k)), 1

    def step_state(self, state, depth: int):
        size = depth + 2
        new = [[0] * size for _ in range(size)]
        tot = [0] * (size + 1)
        for p, row in enumerate(state):
            suf = 0
            for s in range(len(row) - 1, -1, -1):
                suf += row[s]
                if suf:
                    new[p + 1][s] += suf
            tot[p] = suf
        suf_tot = [0] * (size + 2)
        for j in range(size - 1, -1, -1):
            suf_tot[j] = suf_tot[j + 1] + tot[j]
        for p2 in range(1, size):
            for k in range(size - p2):
                v = suf_tot[p2 + k]
                if not v:
                    break
                new[p2][k] += v
        return new


class Rule759(_LeftGrownRule):
    """(p, c) = leading zeros and remaining commitments; the jump out of a
    committed-free label carries multiplicity m_{l,b} = binom(l, b) * C_b,
    the number of admissible commitment words."""

    class_id = ClassId.C759

    def counted(self, label: Label) -> bool:
        return label.params[1] == 0

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        p, c = label.params
        yield Label("", (p + 1, c)), 1
        if c > 0:
            yield Label("", (p + 1, c - 1)), 1
        if c == 0 and p >= 1:
            for ell in range(p):
                for b in range(ell + 1):
                    yield Label("", (p - ell, b)), multiplicity_m(ell, b)

    def step_state(self, state, depth: int):
        size = depth + 2
        new = [[0] * size for _ in range(size)]
        c0 = [0] * (size + 2)
        for p, row in enumerate(state):
            for c, cnt in enumerate(row):
                if cnt:
                    new[p + 1][c] += cnt
                    if c > 0:
                        new[p + 1][c - 1] += cnt
            if row:
                c0[p] = row[0]
        # g[b][q] = sum_{l} binom(l, b) * c0[q + l]; Pascal recurrence in b
        g_prev = [0] * (size + 2)
        for q in range(size - 1, -1, -1):
            g_prev[q] = g_prev[q + 1] + c0[q]
        for b in range(size):
            cb = catalan(b)
            if b == 0:
                g = g_prev
            else:
                g = [0] * (size + 2)
                for q in range(size - 1, -1, -1):
                    g[q] = g[q + 1] + g_prev[q + 1]
                g_prev = g
            for p2 in range(1, size - b):
                v = g[p2]
                if v:
                    new[p2][b] += cb * v
        return new


class Rule247(_LeftGrownRule):
    """As 759 with at most one repeat per commitment letter; jump
    multiplicity w_{l,b} = binom(b+1, l-b) * C_b.  Counted labels are the
    genuine avoiders: c = 0 and p <= 2."""

    class_id = ClassId.C247

    def counted(self, label: Label) -> bool:
        p, c = label.params
        return c == 0 and p <= 2

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        p, c = label.params
        yield Label("", (p + 1, c)), 1
        if c > 0:
            yield Label("", (p + 1, c - 1)), 1
        if c == 0 and p >= 1:
            for ell in range(p):
                for b in range(ell + 1):
                    w = multiplicity_w(ell, b)
                    if w:
                        yield Label("", (p - ell, b)), w

    def step_state(self, state, depth: int):
        size = depth + 2
        new = [[0] * size for _ in range(size)]
        c0 = [0] * (size + 3)
        for p, row in enumerate(state):
            for c, cnt in enumerate(row):
                if cnt:
                    new[p + 1][c] += cnt
                    if c > 0:
                        new[p + 1][c - 1] += cnt
            if row:
                c0[p] = row[0]
        # e[b][q] = sum_j binom(b, j - q - b) * c0[j]
        e_prev = list(c0)
        for b in range(size):
            if b == 0:
                e = e_prev
            else:
                e = [0] * (size + 3)
                for q in range(size):
                    e[q] = e_prev[q + 1] + e_prev[q + 2]
                e_prev = e
            cb = catalan(b)
            for p2 in range(1, size - b):
                v = e[p2] + e[p2 + 1]
                if v:
                    new[p2][b] += cb * v
        return new


class _SingleRunRule(SuccessionRule):
    """Classes 663A and 1420: labels (p)_a / (p)_b with p the zero prefix."""

    def root(self) -> Label:
        return Label("a", (0,))

    def initial_state(self):
        return {self.root(): 1}


class Rule663A(_SingleRunRule):
    class_id = ClassId.C663A

    def counted(self, label: Label) -> bool:
        return label.tag == "a"

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        (p,) = label.params
        if label.tag == "a":
            for k in range(1, p + 2):
                yield Label("a", (k,)), 1
            for ell in range(1, p):
                yield Label("b", (ell,)), 1
        elif label.tag == "b":
            yield Label("a", (p + 1,)), 1
            yield Label("b", (p + 1,)), 1
        else:
            raise RuleError(f"unknown tag {label.tag!r}")


class Rule1420(_SingleRunRule):
    class_id = ClassId.C1420

    def counted(self, label: Label) -> bool:
        return True

    def expand(self, label: Label, depth: int) -> Iterator[tuple[Label, int]]:
        (p,) = label.params
        if label.tag == "a":
            for j in range(1, p + 2):
                yield Label("a", (j,)), 1
            for j in range(1, p):
                yield Label("b", (j,)), 1
        elif label.tag == "b":
            for j in range(1, p + 2):
                yield Label("a", (j,)), 1
            yield Label("b", (p + 1,)), 1
            for j in range(1, p):
                yield Label("b", (j,)), 1
        else:
            raise RuleError(f"unknown tag {label.tag!r}")


_RULES: dict[ClassId, SuccessionRule] = {
    r.class_id: r
    for r in (
        Rule214(),
        Rule247(),
        Rule663A(),
        Rule733(),
        Rule759(),
        Rule830(),
        Rule1016(),
        Rule1176(),
        Rule1253(),
        Rule1420(),
        Rule1509(),
        Rule1833A(),
        Rule1953A(),
        Rule2106(),
    )
}


def rule_for(class_id: ClassId) -> SuccessionRule:
    return _RULES[class_id]


# Resumable per-class cache: counting a class to depth n once makes all
# prefixes free, and extending continues from the last stepped state.
_CACHE: dict[ClassId, dict] = {}


def count_class(class_id: ClassId, n_max: int) -> list[int]:
    """I_0 .. I_{n_max} for the class, by label-census dynamic programming."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rule = _RULES[class_id]
    entry = _CACHE.get(class_id)
    if entry is None:
        state = rule.initial_state()
        entry = {
            "state": state,
            "depth": 0,
            "counts": [rule.counted_total(state, 0)],
        }
        _CACHE[class_id] = entry
    while entry["depth"] < n_max:
        entry["state"] = rule.step_state(entry["state"], entry["depth"])
        entry["depth"] += 1
        entry["counts"].append(rule.counted_total(entry["state"], entry["depth"]))
    return entry["counts"][: n_max + 1]


def label_census(class_id: ClassId, n: int) -> dict[Label, int]:
    """The full census at depth n, phantom labels included."""
    rule = _RULES[class_id]
    state = rule.initial_state()
    for depth in range(n):
        state = rule.step_state(state, depth)
    return rule.census_from_state(state, n)
