"""Epsilon-NFAs compiled from regex trees.

Intersection-free trees compile to a single flat NFA via the classic
inductive construction.  Intersections become product automata: when an
intersection sits at the top of the tree (possibly under unions) the
product stays implicit, with one state set tracked per operand; when an
intersection is nested under concatenation or a closure operator, an
explicit reachable-state product is built and embedded.

State sets are integer bitmasks for flat automata and tuples of child
sets for the implicit composites, and they are always epsilon-closed.
An empty set signals a dead prefix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union as TUnion

from .rex import (
    Alphabet,
    Concat,
    Eps,
    Inter,
    Lit,
    Node,
    Opt,
    Plus,
    Regex,
    Star,
    Symbol,
    Union,
    symbols,
)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Nfa:
    """Flat epsilon-NFA over symbol ids, with closed-bitmask stepping."""

    def __init__(
        self,
        alphabet: Alphabet,
        state_count: int,
        start: int,
        accepting: Iterable[int],
        epsilon_edges: Iterable[tuple[int, int]],
        labeled_edges: Iterable[tuple[int, int, int]],
    ):
        self.alphabet = alphabet
        self.state_count = state_count
        self.start = start
        self.accepting = frozenset(accepting)
        self.epsilon_edges = frozenset(epsilon_edges)
        self.labeled_edges = frozenset(labeled_edges)
        for s, t in self.epsilon_edges:
            assert 0 <= s < state_count and 0 <= t < state_count
        for s, a, t in self.labeled_edges:
            assert 0 <= s < state_count and 0 <= t < state_count and 0 <= a < len(alphabet)
        assert 0 <= start < state_count
        self._prepared = False

    # -- derived tables, built once on first use ----------------------

    def _prepare(self) -> None:
        if self._prepared:
            return
        n = self.state_count
        eps_adj: list[list[int]] = [[] for _ in range(n)]
        for s, t in self.epsilon_edges:
            eps_adj[s].append(t)
        closure = [0] * n
        for s in range(n):
            seen = 1 << s
            stack = [s]
            while stack:
                u = stack.pop()
                for v in eps_adj[u]:
                    b = 1 << v
                    if not seen & b:
                        seen |= b
                        stack.append(v)
            closure[s] = seen
        self._closure = closure
        trans: list[dict[int, int]] = [{} for _ in range(n)]
        for s, a, t in self.labeled_edges:
            trans[s][a] = trans[s].get(a, 0) | closure[t]
        self._trans = trans
        rev_any = [0] * n
        for s in range(n):
            sbit = 1 << s
            for mask in trans[s].values():
                for t in _bits(mask):
                    rev_any[t] |= sbit
        self._rev_any = rev_any
        self._accept_mask = 0
        for s in self.accepting:
            self._accept_mask |= 1 << s
        self._start_set = closure[self.start]
        self._step_cache: dict[tuple[int, int], int] = {}
        self._reach_layers = [self._accept_mask]
        self._reach_any: int | None = None
        self._prepared = True

    # -- stepping ------------------------------------------------------

    def start_set(self) -> int:
        self._prepare()
        return self._start_set

    def step(self, states: int, sym_id: int) -> int:
        self._prepare()
        key = (states, sym_id)
        got = self._step_cache.get(key)
        if got is not None:
            return got
        out = 0
        trans = self._trans
        for s in _bits(states):
            out |= trans[s].get(sym_id, 0)
        self._step_cache[key] = out
        return out

    def is_dead(self, states: int) -> bool:
        return states == 0

    def accepts(self, states: int) -> bool:
        self._prepare()
        return bool(states & self._accept_mask)

    def reach_in(self, steps: int) -> int:
        """Mask of states with some accepting path of exactly ``steps`` symbols."""
        self._prepare()
        layers = self._reach_layers
        while len(layers) <= steps:
            prev = layers[-1]
            nxt = 0
            for t in _bits(prev):
                nxt |= self._rev_any[t]
            layers.append(nxt)
        return layers[steps]

    def feasible(self, states: int, steps: int) -> bool:
        return bool(states & self.reach_in(steps))

    def alive_mask(self) -> int:
        """Mask of states from which acceptance is reachable at all."""
        self._prepare()
        if self._reach_any is None:
            alive = self._accept_mask
            frontier = alive
            while frontier:
                grown = 0
                for t in _bits(frontier):
                    grown |= self._rev_any[t]
                frontier = grown & ~alive
                alive |= grown
            self._reach_any = alive
        return self._reach_any

    def alive(self, states: int) -> bool:
        return bool(states & self.alive_mask())


@dataclass(frozen=True)
class ProductAuto:
    """Implicit intersection: one operand automaton per child.

    A state set is the tuple of per-child sets; the joint reachable set
    is exactly their cartesian product, because the operands step in
    lockstep on the same symbols.
    """

    children: tuple[Nfa, ...]

    @property
    def alphabet(self) -> Alphabet:
        return self.children[0].alphabet

    def start_set(self):
        return tuple(c.start_set() for c in self.children)

    def step(self, states, sym_id: int):
        return tuple(c.step(s, sym_id) for c, s in zip(self.children, states))

    def is_dead(self, states) -> bool:
        return any(c.is_dead(s) for c, s in zip(self.children, states))

    def accepts(self, states) -> bool:
        return all(c.accepts(s) for c, s in zip(self.children, states))

    def feasible(self, states, steps: int) -> bool:
        # Sound overapproximation: each child needs its own witness word.
        return all(c.feasible(s, steps) for c, s in zip(self.children, states))

    def alive(self, states) -> bool:
        return all(c.alive(s) for c, s in zip(self.children, states))


@dataclass(frozen=True)
class UnionAuto:
    """Implicit union of automata (children may be flat or products)."""

    children: tuple[TUnion[Nfa, ProductAuto], ...]

    @property
    def alphabet(self) -> Alphabet:
        return self.children[0].alphabet

    def start_set(self):
        return tuple(c.start_set() for c in self.children)

    def step(self, states, sym_id: int):
        return tuple(c.step(s, sym_id) for c, s in zip(self.children, states))

    def is_dead(self, states) -> bool:
        return all(c.is_dead(s) for c, s in zip(self.children, states))

    def accepts(self, states) -> bool:
        return any(c.accepts(s) for c, s in zip(self.children, states))

    def feasible(self, states, steps: int) -> bool:
        return any(c.feasible(s, steps) for c, s in zip(self.children, states))

    def alive(self, states) -> bool:
        return any(c.alive(s) for c, s in zip(self.children, states))


Automaton = TUnion[Nfa, ProductAuto, UnionAuto]


# --- compilation -------------------------------------------------------------

def _contains_inter(node: Node, memo: dict[int, bool] | None = None) -> bool:
    if memo is None:
        memo = {}
    got = memo.get(id(node))
    if got is not None:
        return got
    if isinstance(node, Inter):
        out = True
    elif isinstance(node, (Concat, Union)):
        out = any(_contains_inter(p, memo) for p in node.parts)
    elif isinstance(node, (Star, Plus, Opt)):
        out = _contains_inter(node.body, memo)
    else:
        out = False
    memo[id(node)] = out
    return out


class _Builder:
    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.count = 0
        self.eps: list[tuple[int, int]] = []
        self.lab: list[tuple[int, int, int]] = []

    def fresh(self) -> int:
        s = self.count
        self.count += 1
        return s

    def fragment(self, node: Node) -> tuple[int, int]:
        if isinstance(node, Eps):
            s, t = self.fresh(), self.fresh()
            self.eps.append((s, t))
            return s, t
        if isinstance(node, Lit):
            s, t = self.fresh(), self.fresh()
            self.lab.append((s, node.sym.id, t))
            return s, t
        if isinstance(node, Concat):
            first_s, prev_t = self.fragment(node.parts[0])
            for p in node.parts[1:]:
                s, t = self.fragment(p)
                self.eps.append((prev_t, s))
                prev_t = t
            return first_s, prev_t
        if isinstance(node, Union):
            s, t = self.fresh(), self.fresh()
            for p in node.parts:
                ps, pt = self.fragment(p)
                self.eps.append((s, ps))
                self.eps.append((pt, t))
            return s, t
        if isinstance(node, Star):
            bs, bt = self.fragment(node.body)
            s, t = self.fresh(), self.fresh()
            self.eps.extend([(s, bs), (bt, t), (s, t), (bt, bs)])
            return s, t
        if isinstance(node, Plus):
            bs, bt = self.fragment(node.body)
            s, t = self.fresh(), self.fresh()
            self.eps.extend([(s, bs), (bt, t), (bt, bs)])
            return s, t
        if isinstance(node, Opt):
            bs, bt = self.fragment(node.body)
            s, t = self.fresh(), self.fresh()
            self.eps.extend([(s, bs), (bt, t), (s, t)])
            return s, t
        if isinstance(node, Inter):
            flat = flatten(compile_regex(Regex(node, self.alphabet)))
            return self.embed(flat)
        raise TypeError(f"unknown node {node!r}")

    def embed(self, sub: Nfa) -> tuple[int, int]:
        base = self.count
        self.count += sub.state_count
        for s, t in sub.epsilon_edges:
            self.eps.append((base + s, base + t))
        for s, a, t in sub.labeled_edges:
            self.lab.append((base + s, a, base + t))
        exit_state = self.fresh()
        for s in sub.accepting:
            self.eps.append((base + s, exit_state))
        return base + sub.start, exit_state

    def finish(self, start: int, accept: int) -> Nfa:
        return Nfa(self.alphabet, self.count, start, [accept], self.eps, self.lab)


def _thompson(node: Node, alphabet: Alphabet) -> Nfa:
    b = _Builder(alphabet)
    s, t = b.fragment(node)
    return b.finish(s, t)


def _explicit_product(children: Sequence[Nfa], alphabet: Alphabet) -> Nfa:
    """Reachable synchronous product with pairwise epsilon interleaving."""
    start = tuple(c.start for c in children)
    index = {start: 0}
    order = [start]
    eps: list[tuple[int, int]] = []
    lab: list[tuple[int, int, int]] = []
    eps_adj = []
    lab_adj = []
    for c in children:
        ea: dict[int, list[int]] = {}
        for s, t in c.epsilon_edges:
            ea.setdefault(s, []).append(t)
        la: dict[tuple[int, int], list[int]] = {}
        for s, a, t in c.labeled_edges:
            la.setdefault((s, a), []).append(t)
        eps_adj.append(ea)
        lab_adj.append(la)
    queue = deque([start])
    nsyms = len(alphabet)
    while queue:
        u = queue.popleft()
        ui = index[u]
        for i, c in enumerate(children):
            for t in eps_adj[i].get(u[i], ()):
                v = u[:i] + (t,) + u[i + 1:]
                vi = index.get(v)
                if vi is None:
                    vi = index[v] = len(order)
                    order.append(v)
                    queue.append(v)
                eps.append((ui, vi))
        for a in range(nsyms):
            targets = [lab_adj[i].get((u[i], a)) for i in range(len(children))]
            if any(t is None for t in targets):
                continue
            combos = [()]
            for tlist in targets:
                combos = [c0 + (t,) for c0 in combos for t in tlist]
            for v in combos:
                vi = index.get(v)
                if vi is None:
                    vi = index[v] = len(order)
                    order.append(v)
                    queue.append(v)
                lab.append((ui, a, vi))
    accepting = [
        i for i, u in enumerate(order)
        if all(u[j] in c.accepting for j, c in enumerate(children))
    ]
    return Nfa(alphabet, len(order), 0, accepting, eps, lab)


def _disjoint_union(children: Sequence[Nfa], alphabet: Alphabet) -> Nfa:
    count = 1
    eps: list[tuple[int, int]] = []
    lab: list[tuple[int, int, int]] = []
    accepting: list[int] = []
    for c in children:
        base = count
        count += c.state_count
        eps.append((0, base + c.start))
        eps.extend((base + s, base + t) for s, t in c.epsilon_edges)
        lab.extend((base + s, a, base + t) for s, a, t in c.labeled_edges)
        accepting.extend(base + s for s in c.accepting)
    return Nfa(alphabet, count, 0, accepting, eps, lab)


def flatten(auto: Automaton) -> Nfa:
    """Collapse composites into one flat NFA (explicit product / sum)."""
    if isinstance(auto, Nfa):
        return auto
    if isinstance(auto, ProductAuto):
        return _explicit_product(auto.children, auto.alphabet)
    return _disjoint_union([flatten(c) for c in auto.children], auto.alphabet)


def compile_regex(r: Regex) -> Automaton:
    """Compile to an automaton with the same language.

    Product states are kept implicit for intersections at the top of
    the tree; nested intersections are expanded into explicit reachable
    products, which stay polynomial in the operand sizes.
    """
    node = r.node
    if isinstance(node, Inter):
        flats = tuple(flatten(compile_regex(Regex(p, r.alphabet))) for p in node.parts)
        return ProductAuto(flats)
    if isinstance(node, Union) and _contains_inter(node):
        children: list[TUnion[Nfa, ProductAuto]] = []
        for p in node.parts:
            sub = compile_regex(Regex(p, r.alphabet))
            if isinstance(sub, UnionAuto):
                children.extend(sub.children)
            else:
                children.append(sub)
        return UnionAuto(tuple(children))
    return _thompson(node, r.alphabet)


# --- queries -------------------------------------------------------------------

def matches(auto: Automaton, w) -> bool:
    """True iff the word (string or symbol sequence) is accepted."""
    s = auto.start_set()
    for sym in symbols(auto.alphabet, w):
        if auto.is_dead(s):
            return False
        s = auto.step(s, sym.id)
    return auto.accepts(s)


def step(auto: Automaton, states, sym: TUnion[Symbol, str, int]):
    """One closed step of a state set on a symbol."""
    if isinstance(sym, Symbol):
        sym_id = auto.alphabet.symbol(sym.token).id
    elif isinstance(sym, str):
        sym_id = auto.alphabet.symbol(sym).id
    else:
        sym_id = sym
    return auto.step(states, sym_id)


def _joint_states(auto: Automaton) -> list[Nfa]:
    if isinstance(auto, Nfa):
        return [auto]
    if isinstance(auto, ProductAuto):
        return list(auto.children)
    raise TypeError("joint search expects a flat or product automaton")


def _product_nonempty(children: Sequence[Nfa], allowed: Iterable[int] | None) -> bool:
    """Lazy BFS over joint states; True iff a common word is accepted."""
    for c in children:
        c._prepare()
    syms = list(range(len(children[0].alphabet))) if allowed is None else list(allowed)
    starts = [list(_bits(c.start_set())) for c in children]
    queue: deque[tuple[int, ...]] = deque()
    seen: set[tuple[int, ...]] = set()
    combos: list[tuple[int, ...]] = [()]
    for group in starts:
        combos = [c0 + (s,) for c0 in combos for s in group]
    for u in combos:
        if u not in seen:
            seen.add(u)
            queue.append(u)
    acc_masks = [c._accept_mask for c in children]
    while queue:
        u = queue.popleft()
        if all((1 << u[i]) & acc_masks[i] for i in range(len(children))):
            return True
        for a in syms:
            targets = [children[i]._trans[u[i]].get(a, 0) for i in range(len(children))]
            if any(t == 0 for t in targets):
                continue
            groups = [list(_bits(t)) for t in targets]
            combos = [()]
            for g in groups:
                combos = [c0 + (s,) for c0 in combos for s in g]
            for v in combos:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return False


def is_empty(auto: Automaton) -> bool:
    """True iff the automaton accepts no word at all."""
    if isinstance(auto, Nfa):
        return not auto.alive(auto.start_set())
    if isinstance(auto, UnionAuto):
        return all(is_empty(c) for c in auto.children)
    return not _product_nonempty(_joint_states(auto), None)


def is_empty_restricted(auto: Automaton, allowed_ids: Iterable[int]) -> bool:
    """Emptiness of the language intersected with ``allowed_ids``-only words."""
    allowed = sorted(set(allowed_ids))
    if isinstance(auto, Nfa):
        auto._prepare()
        reach = auto.start_set()
        frontier = reach
        while frontier:
            grown = 0
            for a in allowed:
                grown |= auto.step(frontier, a)
            frontier = grown & ~reach
            reach |= grown
        return not auto.accepts(reach)
    if isinstance(auto, UnionAuto):
        return all(is_empty_restricted(c, allowed) for c in auto.children)
    return not _product_nonempty(_joint_states(auto), allowed)


def enumerate_language(auto: Automaton, max_len: int) -> list[str]:
    """All accepted words up to ``max_len``, shortest first, then by symbol id.

    Words are returned as concatenated tokens.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    alphabet = auto.alphabet
    out: list[str] = []
    start = auto.start_set()
    for target in range(max_len + 1):
        if target == 0:
            if auto.accepts(start):
                out.append("")
            continue
        path: list[str] = []

        def walk(states, remaining: int) -> None:
            for sym in alphabet:
                nxt = auto.step(states, sym.id)
                if auto.is_dead(nxt) or not auto.feasible(nxt, remaining - 1):
                    continue
                path.append(sym.token)
                if remaining == 1:
                    if auto.accepts(nxt):
                        out.append("".join(path))
                else:
                    walk(nxt, remaining - 1)
                path.pop()

        walk(start, target)
    return out
