"""Constant-weight cyclic Gray codes over two-cell-window digit words.

With windows of size two a codeword is binary and a push on cell i flips
the digit pair (i-1, i) from 01 to 10, preserving weight.  A Gray-code
step is therefore directed: the next word must arise from the previous one
by a single 01 -> 10 change, and a cyclic code closes from its last word
back to its first the same way.  ``gray_adjacent`` is the symmetric
one-move-apart predicate; ``push_step`` is the directed step relation that
cycles must follow.

The default mode reads the changed pair cyclically and requires it to be
cyclically adjacent, matching what one push can touch.  Mode "any" relaxes
adjacency and reads the pair left to right; every such move strictly drops
the sum of one-positions, so no cyclic code exists under it at all, which
is the strongest sign the adjacent reading is the operative one.

Cycle files carry a header line "n=<n> w=<w> len=<len>" followed by one
binary word per line in cyclic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .census import enumeration_budget

_DEFAULT_VERTEX_BUDGET = 120

MODES = ("adjacent", "any")


def weight_words(n: int, w: int) -> list[str]:
    """All binary words of length n and weight w, lexicographically sorted."""
    if not 0 <= w <= n:
        raise ValueError(f"weight must lie in 0..{n}, got {w}")
    words = []
    for ones in itertools.combinations(range(n), w):
        word = ["0"] * n
        for i in ones:
            word[i] = "1"
        words.append("".join(word))
    return sorted(words)


def _check_pair(u: str, v: str) -> None:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    if u.count("1") != v.count("1"):
        raise ValueError(f"weight mismatch: {u} vs {v}")


def push_step(u: str, v: str, mode: str = "adjacent") -> bool:
    """Directed step: v arises from u by one 01 -> 10 change.

    Default mode reads the changed pair in cyclic order and requires it to
    be cyclically adjacent (positions (p, p+1 mod n)); this is exactly a
    weight-preserving push.  Mode "any" allows any two positions, read left
    to right.
    """
    if mode not in MODES:
        raise ValueError(f"unknown adjacency mode: {mode!r}")
    _check_pair(u, v)
    diffs = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diffs) != 2:
        return False
    p, q = diffs
    n = len(u)
    if mode == "any":
        return u[p] + u[q] == "01"
    if q == p + 1:
        return u[p] + u[q] == "01"
    if p == 0 and q == n - 1:
        return u[q] + u[p] == "01"  # the pair (n-1, 0) in cyclic order
    return False


def gray_adjacent(u: str, v: str, mode: str = "adjacent") -> bool:
    """Whether one weight-preserving 01 -> 10 move maps either word to the other.

    The symmetric companion of ``push_step``: equal-weight words differing
    in exactly two (default: cyclically adjacent) positions always swap a 0
    with a 1, one direction of which is the valid step.
    """
    if mode not in MODES:
        raise ValueError(f"unknown adjacency mode: {mode!r}")
    _check_pair(u, v)
    diffs = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diffs) != 2:
        return False
    if mode == "any":
        return True
    p, q = diffs
    n = len(u)
    return q == p + 1 or (p == 0 and q == n - 1)


@dataclass(frozen=True)
class GrayGraph:
    """All weight-w words of length n, with edges and directed steps."""

    n: int
    w: int
    mode: str
    vertices: tuple[str, ...]
    adjacency: dict[str, tuple[str, ...]]
    successors: dict[str, tuple[str, ...]]

    @classmethod
    def build(cls, n: int, w: int, mode: str = "adjacent") -> "GrayGraph":
        vertices = tuple(weight_words(n, w))
        neighbours: dict[str, list[str]] = {u: [] for u in vertices}
        succ: dict[str, list[str]] = {u: [] for u in vertices}
        for u, v in itertools.combinations(vertices, 2):
            if gray_adjacent(u, v, mode):
                neighbours[u].append(v)
                neighbours[v].append(u)
            if push_step(u, v, mode):
                succ[u].append(v)
            if push_step(v, u, mode):
                succ[v].append(u)
        return cls(
            n=n,
            w=w,
            mode=mode,
            vertices=vertices,
            adjacency={u: tuple(sorted(vs)) for u, vs in neighbours.items()},
            successors={u: tuple(sorted(vs)) for u, vs in succ.items()},
        )


@dataclass(frozen=True)
class GrayCycle:
    """Cyclic sequence of distinct equal-weight words, each step one push."""

    words: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.words)

    def header(self) -> str:
        n = len(self.words[0]) if self.words else 0
        w = self.words[0].count("1") if self.words else 0
        return f"n={n} w={w} len={len(self.words)}"

    def to_file_text(self) -> str:
        return "\n".join([self.header(), *self.words]) + "\n"

    @classmethod
    def from_file_text(cls, text: str) -> "GrayCycle":
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines or not lines[0].startswith("n="):
            raise ValueError("cycle file must start with a 'n=<n> w=<w> len=<len>' header")
        return cls(words=tuple(lines[1:]))


def longest_cycle(n: int, w: int, mode: str = "adjacent") -> tuple[int, GrayCycle | None]:
    """Length and witness of a maximum simple directed cycle of push steps.

    Exhaustive backtracking over start words in lexicographic order,
    visiting only words above the start so every cycle is met exactly once,
    at its minimum word.  A branch dies when even the words still reachable
    cannot beat the best cycle, or when the start is out of reach.
    """
    graph = GrayGraph.build(n, w, mode)
    budget = enumeration_budget(_DEFAULT_VERTEX_BUDGET)
    if len(graph.vertices) > budget:
        raise ValueError(f"{len(graph.vertices)} vertices exceed the search budget {budget}")
    verts = graph.vertices
    index = {v: i for i, v in enumerate(verts)}
    succ = graph.successors
    best_len = 0
    best: tuple[str, ...] | None = None

    def reach_and_closable(u: str, si: int, on_path: set[str], start: str) -> tuple[int, bool]:
        seen = {u}
        stack = [u]
        closable = start in succ[u]
        count = 0
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if index[y] <= si or y in on_path or y in seen:
                    continue
                seen.add(y)
                count += 1
                stack.append(y)
                if not closable and start in succ[y]:
                    closable = True
        return count, closable

    for si, start in enumerate(verts):
        if len(verts) - si <= best_len:
            break
        path = [start]
        on_path = {start}

        def extend(u: str) -> None:
            nonlocal best_len, best
            for v in succ[u]:
                if index[v] <= si or v in on_path:
                    continue
                path.append(v)
                on_path.add(v)
                if len(path) >= 3 and start in succ[v] and len(path) > best_len:
                    best_len = len(path)
                    best = tuple(path)
                room, closable = reach_and_closable(v, si, on_path, start)
                if closable and len(path) + room > best_len:
                    extend(v)
                on_path.discard(v)
                path.pop()

        extend(start)
    return best_len, (GrayCycle(words=best) if best is not None else None)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_cycle(words: Sequence[str], n: int, w: int, mode: str = "adjacent") -> ValidationResult:
    """Check the cycle invariants of an externally supplied word sequence.

    Every consecutive step, the wrap back to the first word included, must
    be a directed push step.  Failure reasons: "length", "weight",
    "duplicate", "adjacency", "wrap".
    """
    words = list(words)
    if not words:
        return ValidationResult(False, "length", "empty sequence")
    for word in words:
        if len(word) != n or any(ch not in "01" for ch in word):
            return ValidationResult(False, "length", word)
    for word in words:
        if word.count("1") != w:
            return ValidationResult(False, "weight", word)
    seen: set[str] = set()
    for word in words:
        if word in seen:
            return ValidationResult(False, "duplicate", word)
        seen.add(word)
    for a, b in itertools.pairwise(words):
        if not push_step(a, b, mode):
            return ValidationResult(False, "adjacency", f"{a}->{b}")
    if not push_step(words[-1], words[0], mode):
        return ValidationResult(False, "wrap", f"{words[-1]}->{words[0]}")
    return ValidationResult(True)


def push_move_positions(u: str, v: str) -> list[int]:
    """Cells whose push maps the digit word u to v (t = 2 convention).

    A push on cell i rewrites digits (i-1, i) to (1, 0); it moves u to v
    exactly when u had (0, 1) there and the words agree elsewhere.
    """
    _check_pair(u, v)
    n = len(u)
    cells = []
    for i in range(n):
        j = (i - 1) % n
        if u[j] + u[i] == "01" and v[j] + v[i] == "10":
            rest_u = [u[k] for k in range(n) if k not in (i, j)]
            rest_v = [v[k] for k in range(n) if k not in (i, j)]
            if rest_u == rest_v:
                cells.append(i)
    return cells


__all__ = [
    "GrayCycle",
    "GrayGraph",
    "MODES",
    "ValidationResult",
    "gray_adjacent",
    "longest_cycle",
    "push_move_positions",
    "push_step",
    "validate_cycle",
    "weight_words",
]
