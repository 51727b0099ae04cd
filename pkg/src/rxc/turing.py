"""Deterministic single-tape Turing machines and their run tableaux.

The machine model: a unique halting state distinct from the start
state, a two-way infinite tape, and a head that moves left or right on
every step.  Simulation places the initial tape content on cells
1..len and starts with the head on the blank cell 0, immediately to
the left of it.

Four run conventions matter for the grid constructions built on top:

1. the head initially scans the blank cell just left of the input;
2. the first transition is (start, blank) -> (q1, blank, L) for some
   q1 other than the start state;
3. the start state is never re-entered, and the head never moves left
   of the cell reached after the first step;
4. the blank cell just right of the input is scanned at some point.

``validate_assumptions`` reports on each of these; 3 and 4 are only
semidecidable, so past the step budget they are reported as unknown
rather than guessed.

Any machine can be adapted by hand to meet the conventions without
changing what it halts on.  The standard recipe: add fresh states q0'
(new start) and q1' with (q0', blank) -> (q1', blank, L); from q1',
write a reserved end-guard symbol, step right, and hand control to the
original start state; give every state a rule that bounces right off
the guard symbol, so the head can never pass it; and if the original
machine might halt without reaching the blank after the input, insert
a one-off sweep to that blank and back before entering the original
logic.  The sample machines in :mod:`rxc.machines` are small enough to
satisfy the conventions directly instead.

Machine files are line oriented::

    blank = B
    start = q0
    halt = qh
    tape = B a #
    delta q0 B = q1 B L

with ``#`` comment lines (full-line only) and states inferred from the
transitions plus the start/halt lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

LEFT = "L"
RIGHT = "R"


class MachineError(ValueError):
    pass


@dataclass(frozen=True)
class TuringMachine:
    states: tuple[str, ...]
    tape_symbols: tuple[str, ...]
    blank: str
    start: str
    halt: str
    rules: Mapping[tuple[str, str], tuple[str, str, str]]

    def __post_init__(self):
        states = set(self.states)
        syms = set(self.tape_symbols)
        if len(states) != len(self.states) or len(syms) != len(self.tape_symbols):
            raise MachineError("duplicate state or tape symbol names")
        if self.blank not in syms:
            raise MachineError("blank symbol missing from tape alphabet")
        if self.start not in states or self.halt not in states:
            raise MachineError("start or halt state missing from state list")
        if self.start == self.halt:
            raise MachineError("halting state must differ from the start state")
        for q in self.states:
            if q == self.halt:
                continue
            for a in self.tape_symbols:
                if (q, a) not in self.rules:
                    raise MachineError(f"transition missing for ({q}, {a})")
        for (q, a), (q2, b, d) in self.rules.items():
            if q == self.halt:
                raise MachineError("halting state has outgoing transitions")
            if q not in states or q2 not in states:
                raise MachineError(f"rule ({q},{a}) uses an unknown state")
            if a not in syms or b not in syms:
                raise MachineError(f"rule ({q},{a}) uses an unknown tape symbol")
            if d not in (LEFT, RIGHT):
                raise MachineError(f"rule ({q},{a}) must move L or R")

    @property
    def nonhalting_states(self) -> tuple[str, ...]:
        return tuple(q for q in self.states if q != self.halt)


@dataclass(frozen=True)
class Config:
    state: str
    head: int
    window: tuple[str, ...]  # tape content over [window_start, window_end]


@dataclass(frozen=True)
class RunTrace:
    machine: TuringMachine
    configs: tuple[Config, ...]
    window_start: int  # absolute index of the leftmost scanned cell
    halted: bool

    @property
    def steps(self) -> int:
        return len(self.configs) - 1

    @property
    def scanned_cells(self) -> int:
        return len(self.configs[0].window)

    def symbol_at(self, t: int, cell: int) -> str:
        return self.configs[t].window[cell - self.window_start]


def simulate(machine: TuringMachine, initial_tape: Sequence[str] | str,
             max_steps: int) -> RunTrace:
    """Run the machine; the tape content occupies cells 1..len.

    Returns the trace up to the halt (halted=True) or up to max_steps
    (halted=False).  The per-config windows cover exactly the cells the
    head visited during the traced run.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    for sym in initial_tape:
        if sym not in machine.tape_symbols:
            raise MachineError(f"tape symbol {sym!r} not in the machine's alphabet")
    tape: dict[int, str] = {
        i + 1: sym for i, sym in enumerate(initial_tape) if sym != machine.blank
    }
    head = 0
    state = machine.start
    history: list[tuple[str, int, dict[int, str]]] = [(state, head, dict(tape))]
    for _ in range(max_steps):
        if state == machine.halt:
            break
        read = tape.get(head, machine.blank)
        state, write, direction = machine.rules[(state, read)]
        if write == machine.blank:
            tape.pop(head, None)
        else:
            tape[head] = write
        head += 1 if direction == RIGHT else -1
        history.append((state, head, dict(tape)))
    halted = state == machine.halt
    lo = min(h for _, h, _ in history)
    hi = max(h for _, h, _ in history)
    configs = tuple(
        Config(q, h, tuple(t.get(c, machine.blank) for c in range(lo, hi + 1)))
        for q, h, t in history
    )
    return RunTrace(machine, configs, lo, halted)


@dataclass(frozen=True)
class AssumptionReport:
    """Outcome per run convention: 'pass', 'fail' or 'unknown'."""

    statuses: tuple[str, str, str, str]
    notes: tuple[str, str, str, str]
    epsilon_input: bool

    @property
    def all_pass(self) -> bool:
        return all(s == "pass" for s in self.statuses)


def validate_assumptions(machine: TuringMachine, input_string: Sequence[str] | str,
                         max_steps: int) -> AssumptionReport:
    """Check the four run conventions against a bounded simulation."""
    for sym in input_string:
        if sym == machine.blank:
            raise MachineError("input string may not contain the blank symbol")
    statuses = ["pass", "pass", "pass", "pass"]
    notes = [
        "enforced by the simulator: the head starts on cell 0, left of the input",
        "",
        "",
        "",
    ]
    rule = machine.rules.get((machine.start, machine.blank))
    q1 = None
    if rule is None:
        statuses[1] = "fail"
        notes[1] = "no transition for (start, blank)"
    else:
        q1, write, direction = rule
        if write != machine.blank or direction != LEFT or q1 == machine.start:
            statuses[1] = "fail"
            notes[1] = f"initial transition is ({q1},{write},{direction})"
        else:
            notes[1] = f"initial transition moves left into {q1}"

    trace = simulate(machine, input_string, max_steps)
    floor = trace.configs[1].head if len(trace.configs) > 1 else None
    violations = []
    for t, cfg in enumerate(trace.configs):
        if t >= 1 and cfg.state == machine.start:
            violations.append(f"re-enters the start state at step {t}")
            break
        if floor is not None and cfg.head < floor:
            violations.append(f"moves left of cell {floor} at step {t}")
            break
    if violations:
        statuses[2] = "fail"
        notes[2] = violations[0]
    elif not trace.halted:
        statuses[2] = "unknown"
        notes[2] = f"no violation within {max_steps} steps; machine still running"
    else:
        notes[2] = "holds along the entire halting run"

    target = len(input_string) + 1
    epsilon_input = len(input_string) == 0
    scanned = any(cfg.head == target for cfg in trace.configs)
    if scanned:
        statuses[3] = "pass"
        notes[3] = f"scans cell {target}"
    elif trace.halted:
        statuses[3] = "fail"
        notes[3] = f"halts without scanning cell {target}"
    else:
        statuses[3] = "unknown"
        notes[3] = f"cell {target} not scanned within {max_steps} steps"
    if epsilon_input:
        notes[3] += " (empty input: the cell checked is cell 1)"
    return AssumptionReport(tuple(statuses), tuple(notes), epsilon_input)


def build_tableau(trace: RunTrace):
    """The marker grid of a halting run: one row per configuration, one
    column per scanned cell."""
    from .grids import Grid
    from .markers import marker_alphabet

    if not trace.halted:
        raise MachineError("cannot build a tableau from a non-halting trace")
    machine = trace.machine
    configs = trace.configs
    for t, cfg in enumerate(configs):
        if t >= 1 and cfg.state == machine.start:
            raise MachineError("run re-enters the start state")
    if len(configs) > 1:
        floor = configs[1].head
        if any(cfg.head < floor for cfg in configs):
            raise MachineError("run moves left of the post-first-step cell")

    markers = marker_alphabet(machine)
    lo = trace.window_start
    hi = lo + trace.scanned_cells - 1
    rows = []
    for t, cfg in enumerate(configs):
        nxt_head = configs[t + 1].head if t + 1 < len(configs) else None
        nxt_state = configs[t + 1].state if t + 1 < len(configs) else None
        row = []
        for cell in range(lo, hi + 1):
            sym = trace.symbol_at(t, cell)
            if cfg.head == cell:
                row.append(markers.scanned(sym, cfg.state).id)
            elif nxt_head == cell:
                row.append(markers.transmission(sym, nxt_state).id)
            else:
                row.append(markers.unscanned(sym).id)
        rows.append(tuple(row))
    return Grid(markers.alphabet, tuple(rows))


# --- machine files ------------------------------------------------------------

def parse_machine(text: str) -> TuringMachine:
    blank = start = halt = None
    tape: list[str] = []
    rules: dict[tuple[str, str], tuple[str, str, str]] = {}
    states: list[str] = []

    def note_state(q: str) -> None:
        if q not in states:
            states.append(q)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        key_parts = key.split()
        value_parts = value.split()
        if key_parts == ["blank"]:
            (blank,) = value_parts
        elif key_parts == ["start"]:
            (start,) = value_parts
            note_state(start)
        elif key_parts == ["halt"]:
            (halt,) = value_parts
            note_state(halt)
        elif key_parts == ["tape"]:
            tape = value_parts
        elif key_parts and key_parts[0] == "delta":
            if len(key_parts) != 3 or len(value_parts) != 3:
                raise MachineError(f"line {lineno}: bad transition {line!r}")
            _, q, a = key_parts
            q2, b, d = value_parts
            note_state(q)
            note_state(q2)
            rules[(q, a)] = (q2, b, d)
        else:
            raise MachineError(f"line {lineno}: unrecognised line {line!r}")
    if blank is None or start is None or halt is None or not tape:
        raise MachineError("machine file needs blank, start, halt and tape lines")
    return TuringMachine(tuple(states), tuple(tape), blank, start, halt, rules)


def dump_machine(machine: TuringMachine) -> str:
    lines = [
        f"blank = {machine.blank}",
        f"start = {machine.start}",
        f"halt = {machine.halt}",
        "tape = " + " ".join(machine.tape_symbols),
    ]
    for (q, a), (q2, b, d) in sorted(machine.rules.items()):
        lines.append(f"delta {q} {a} = {q2} {b} {d}")
    return "\n".join(lines) + "\n"


def read_machine(path) -> TuringMachine:
    with open(path, "r", encoding="utf-8") as fp:
        return parse_machine(fp.read())


def write_machine(machine: TuringMachine, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(dump_machine(machine))
