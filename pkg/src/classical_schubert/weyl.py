"""
Weyl groups of classical types as (signed) permutations.

Elements are stored in window notation ``(w(1), ..., w(n))`` with negative
entries for sign changes.  Right multiplication by a generator acts on
positions, left multiplication acts on values:

    s_0        negates the first entry
    s_i, i>0   swaps positions i and i+1
    s_hat      (type D, written ``HAT``) swaps positions 1, 2 and negates both

Type C uses the same group model as type B; the tag is kept so that callers
can dispatch on it.

>>> g = GroupType("B", 2)
>>> w0 = longest_element(g)
>>> w0.window, length(w0), reduced_word(w0)
((-1, -2), 4, (0, 1, 0, 1))
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import islice
from typing import Iterable, Iterator, Sequence

# generator index of s_{1-hat} in type D; sorts before 1 as required
HAT = -1

DEFAULT_ELEMENT_LIMIT = 10**6


class WeylError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GroupType:
    tag: str
    rank: int

    def __post_init__(self):
        if self.tag not in ("A", "B", "C", "D"):
            raise WeylError(f"unknown type {self.tag!r}")
        minimum = {"A": 1, "B": 2, "C": 2, "D": 3}[self.tag]
        if not isinstance(self.rank, int) or self.rank < minimum:
            raise WeylError(f"type {self.tag} needs rank >= {minimum}, got {self.rank}")

    @property
    def model(self) -> str:
        """Group model: C shares the signed permutations of B."""
        return "B" if self.tag == "C" else self.tag

    @property
    def generators(self) -> tuple[int, ...]:
        n = self.rank
        if self.model == "A":
            return tuple(range(1, n))
        if self.model == "B":
            return tuple(range(0, n))
        return (HAT,) + tuple(range(1, n))

    @property
    def order(self) -> int:
        f = 1
        for k in range(2, self.rank + 1):
            f *= k
        if self.model == "A":
            return f
        if self.model == "B":
            return 2**self.rank * f
        return 2 ** (self.rank - 1) * f

    def embed(self) -> GroupType:
        """The next group in the series, for the stability embedding."""
        return GroupType(self.tag, self.rank + 1)

    def __str__(self):
        return f"{self.tag}{self.rank}"


@dataclass(frozen=True)
class GroupElement:
    group: GroupType
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.window)
        object.__setattr__(self, "window", w)
        n = self.group.rank
        if len(w) != n or sorted(abs(v) for v in w) != list(range(1, n + 1)):
            raise WeylError(f"{w} is not a signed permutation of 1..{n}")
        negatives = sum(1 for v in w if v < 0)
        if self.group.model == "A" and negatives:
            raise WeylError(f"type A element {w} has negative entries")
        if self.group.model == "D" and negatives % 2:
            raise WeylError(f"type D element {w} has an odd number of sign changes")

    def __call__(self, i: int) -> int:
        """w(i) with the convention w(-i) = -w(i)."""
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: GroupElement) -> GroupElement:
        _check_same(self, other)
        return GroupElement(self.group, tuple(self(v) for v in other.window))

    def inverse(self) -> GroupElement:
        inv = [0] * len(self.window)
        for pos, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = pos if v > 0 else -pos
        return GroupElement(self.group, tuple(inv))

    def bar(self) -> GroupElement:
        """Negate every entry (only meaningful in types B/C)."""
        return GroupElement(self.group, tuple(-v for v in self.window))

    def embed(self) -> GroupElement:
        n = self.group.rank
        return GroupElement(self.group.embed(), self.window + (n + 1,))

    @cached_property
    def length(self) -> int:
        return length(self)

    def sort_key(self):
        return (self.length, self.window)

    def __lt__(self, other: GroupElement) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_window(self.window)


def _check_same(v: GroupElement, w: GroupElement):
    if v.group != w.group:
        raise WeylError(f"elements of different groups {v.group} and {w.group}")


def _check_generator(group: GroupType, i: int):
    if i not in group.generators:
        raise WeylError(f"invalid generator {format_word((i,))} for type {group}")


def identity(group: GroupType) -> GroupElement:
    return GroupElement(group, tuple(range(1, group.rank + 1)))


def generator(group: GroupType, i: int) -> GroupElement:
    return apply_generator(identity(group), i, "right")


def apply_generator(w: GroupElement, i: int, side: str = "right") -> GroupElement:
    _check_generator(w.group, i)
    win = list(w.window)
    if side == "right":
        if i == 0:
            win[0] = -win[0]
        elif i == HAT:
            win[0], win[1] = -win[1], -win[0]
        else:
            win[i - 1], win[i] = win[i], win[i - 1]
    elif side == "left":
        for k, v in enumerate(win):
            a, sign = abs(v), (1 if v > 0 else -1)
            if i == 0:
                if a == 1:
                    win[k] = -v
            elif i == HAT:
                if a in (1, 2):
                    win[k] = -sign * (3 - a)
            elif a == i:
                win[k] = sign * (i + 1)
            elif a == i + 1:
                win[k] = sign * i
    else:
        raise WeylError(f"side must be 'left' or 'right', got {side!r}")
    return GroupElement(w.group, tuple(win))


def from_word(group: GroupType, word: Iterable[int]) -> GroupElement:
    w = identity(group)
    for i in word:
        w = apply_generator(w, i, "right")
    return w


def length(w: GroupElement) -> int:
    """Coxeter length by inversion counting.

    type A: inv(w)
    type B: inv(w) + #{i<j : w(i)+w(j) < 0} + #{i : w(i) < 0}
    type D: inv(w) + #{i<j : w(i)+w(j) < 0}
    """
    win = w.window
    n = len(win)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if win[i] > win[j])
    model = w.group.model
    if model == "A":
        return inv
    neg_pairs = sum(1 for i in range(n) for j in range(i + 1, n) if win[i] + win[j] < 0)
    if model == "D":
        return inv + neg_pairs
    return inv + neg_pairs + sum(1 for v in win if v < 0)


def left_descents(w: GroupElement) -> list[int]:
    l = length(w)
    return [i for i in w.group.generators if length(apply_generator(w, i, "left")) < l]


def right_descents(w: GroupElement) -> list[int]:
    l = length(w)
    return [i for i in w.group.generators if length(apply_generator(w, i, "right")) < l]


def reduced_word(w: GroupElement) -> tuple[int, ...]:
    """Lexicographically smallest reduced word (generator order HAT/0 < 1 < 2 ...)."""
    word = []
    while True:
        desc = left_descents(w)
        if not desc:
            return tuple(word)
        word.append(desc[0])
        w = apply_generator(w, desc[0], "left")


def reduced_words(w: GroupElement, limit: int | None = None) -> list[tuple[int, ...]]:
    """Reduced words of w in lexicographic order, the first ``limit`` of them if given."""
    return list(islice(_reduced_words(w), limit))


def _reduced_words(w: GroupElement) -> Iterator[tuple[int, ...]]:
    desc = left_descents(w)
    if not desc:
        yield ()
        return
    for i in desc:
        for rest in _reduced_words(apply_generator(w, i, "left")):
            yield (i,) + rest


def longest_element(group: GroupType) -> GroupElement:
    n = group.rank
    if group.model == "A":
        return GroupElement(group, tuple(range(n, 0, -1)))
    if group.model == "B" or n % 2 == 0:
        return GroupElement(group, tuple(-i for i in range(1, n + 1)))
    return GroupElement(group, (1,) + tuple(-i for i in range(2, n + 1)))


def all_elements(group: GroupType, limit: int = DEFAULT_ELEMENT_LIMIT) -> list[GroupElement]:
    """Every element, sorted by (length, window)."""
    if group.order > limit:
        raise WeylError(f"|W({group})| = {group.order} exceeds the enumeration limit {limit}")
    return list(weyl_group(group).elements)


def demazure_product(v: GroupElement, w: GroupElement) -> GroupElement:
    _check_same(v, w)
    for i in reduced_word(w):
        up = apply_generator(v, i, "right")
        if length(up) > length(v):
            v = up
    return v


def bruhat_leq(v: GroupElement, w: GroupElement) -> bool:
    _check_same(v, w)
    return v.window in _lower_interval(w)


@lru_cache(maxsize=4096)
def _lower_interval(w: GroupElement) -> frozenset:
    # products of reduced subwords of the canonical reduced word of w
    reach = {identity(w.group)}
    for i in reduced_word(w):
        step = set()
        for u in reach:
            up = apply_generator(u, i, "right")
            if length(up) > length(u):
                step.add(up)
        reach |= step
    return frozenset(u.window for u in reach)


def act_on_poly(w: GroupElement, f, family: str = "x"):
    """Reflection action x_i -> x_{w(i)}, with x_{-i} = -x_i."""
    from .poly import permute_variables

    return permute_variables(f, family, w.window)


def diagram(w: GroupElement) -> set[tuple[int, int]]:
    """Rothe diagram {(i, j) : i < w^-1(j), j < w(i)} of a permutation."""
    if w.group.model != "A" and any(v < 0 for v in w.window):
        raise WeylError("the diagram is defined for unsigned permutations only")
    n = w.group.rank
    inv = w.inverse()
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < inv(j) and j < w(i)}


# -- text formats ---------------------------------------------------------------


def format_window(window: Sequence[int]) -> str:
    return ",".join(str(v) for v in window)


def parse_window(group: GroupType, text: str) -> GroupElement:
    try:
        values = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise WeylError(f"cannot parse window {text!r}") from None
    return GroupElement(group, values)


def format_word(word: Sequence[int]) -> str:
    return ",".join("h" if i == HAT else str(i) for i in word)


def parse_word(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if tok == "h":
            out.append(HAT)
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise WeylError(f"cannot parse generator {tok!r}") from None
    return tuple(out)


# -- enumerated groups ----------------------------------------------------------


@dataclass
class WeylGroup:
    """All elements of a group with precomputed tables, indexed 0..|W|-1 in
    (length, window) order.

    ``right[k][g]`` / ``left[k][g]`` give the index of w_k s_g / s_g w_k where g
    is the position of the generator in ``group.generators``.
    """

    group: GroupType
    elements: list[GroupElement]
    index: dict[tuple[int, ...], int]
    lengths: list[int]
    right: list[list[int]]
    left: list[list[int]]
    gen_pos: dict[int, int] = field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def idx(self, w: GroupElement) -> int:
        return self.index[w.window]

    @cached_property
    def words(self) -> list[tuple[int, ...]]:
        return [reduced_word(w) for w in self.elements]

    @cached_property
    def demazure_table(self) -> list[list[int]]:
        """demazure_table[a][b] = index of w_a * w_b (Demazure product)."""
        table = []
        words = [[self.gen_pos[i] for i in word] for word in self.words]
        for a in range(len(self)):
            row = []
            for b in range(len(self)):
                cur = a
                for g in words[b]:
                    nxt = self.right[cur][g]
                    if self.lengths[nxt] > self.lengths[cur]:
                        cur = nxt
                row.append(cur)
            table.append(row)
        return table

    @cached_property
    def product_table(self) -> list[list[int]]:
        """product_table[a][b] = index of the group product w_a w_b."""
        table = []
        for a, v in enumerate(self.elements):
            table.append([self.index[(v * w).window] for w in self.elements])
        return table


@lru_cache(maxsize=None)
def weyl_group(group: GroupType, limit: int = DEFAULT_ELEMENT_LIMIT) -> WeylGroup:
    if group.order > limit:
        raise WeylError(f"|W({group})| = {group.order} exceeds the enumeration limit {limit}")
    start = identity(group)
    seen = {start.window: start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in group.generators:
            u = apply_generator(w, i, "right")
            if u.window not in seen:
                seen[u.window] = u
                queue.append(u)
    elements = sorted(seen.values(), key=GroupElement.sort_key)
    index = {w.window: k for k, w in enumerate(elements)}
    gens = group.generators
    right = [[index[apply_generator(w, i, "right").window] for i in gens] for w in elements]
    left = [[index[apply_generator(w, i, "left").window] for i in gens] for w in elements]
    return WeylGroup(
        group=group,
        elements=elements,
        index=index,
        lengths=[w.length for w in elements],
        right=right,
        left=left,
        gen_pos={i: p for p, i in enumerate(gens)},
    )


def bfs_lengths(group: GroupType) -> dict[tuple[int, ...], int]:
    """Distance from the identity in the Cayley graph (oracle for ``length``)."""
    start = identity(group)
    dist = {start.window: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in group.generators:
            u = apply_generator(w, i, "right")
            if u.window not in dist:
                dist[u.window] = dist[w.window] + 1
                queue.append(u)
    return dist
