"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Scalar reverse-mode differentiation on an append-only tape.

        tape = Tape()
        w, x = tape.variables([3.0, 2.0])
        y = w * x
        (dy_dx,) = tape.grad(y, [x], create_graph=True)   # recorded on the tape
        (d2,) = tape.grad(dy_dx * dy_dx, [w])              # d/dw (dy/dx)^2 = 2w

    Nodes recorded while a gradient is being recorded get order 1. A gradient
    of an order-1 node may be taken but not recorded again, so the engine
    supports exactly one nested differentiation pass (double backpropagation).

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# diff_engine.py - scalar tape, reverse mode, one recordable gradient pass
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from .errors import DimensionError, NonFiniteValue, UnsupportedDepth


class Op(str, Enum):
    CONST = "const"
    VAR = "var"
    ADD = "add"
    SUB = "sub"
    NEG = "neg"
    MUL = "mul"
    DIV = "div"
    MAX = "max"
    ABS = "abs"
    SQUARE = "square"
    SQRT = "sqrt"
    TANH = "tanh"


_FORWARD: Dict[Op, Callable[..., float]] = {
    Op.ADD: lambda a, b: a + b,
    Op.SUB: lambda a, b: a - b,
    Op.NEG: lambda a: -a,
    Op.MUL: lambda a, b: a * b,
    Op.DIV: lambda a, b: a / b,
    # ties go to the first operand
    Op.MAX: lambda a, b: a if a >= b else b,
    Op.ABS: abs,
    Op.SQUARE: lambda a: a * a,
    Op.SQRT: math.sqrt,
    Op.TANH: math.tanh,
}


@dataclass(slots=True)
class Node:
    op: Op
    args: Tuple[int, ...]
    value: float
    order: int


@dataclass(frozen=True)
class GradResult:
    value: float
    gradient: np.ndarray


class Tape:
    """Append-only list of primitive operations in topological order."""

    def __init__(self) -> None:
        self.nodes: List[Node] = []
        self.leaves: List[int] = []
        self._order = 0

    def __len__(self) -> int:
        return len(self.nodes)

    # ---------------- recording ----------------

    def variable(self, value: float) -> "Var":
        index = self._append(Op.VAR, (), float(value))
        self.leaves.append(index)
        return Var(self, index)

    def variables(self, values: Sequence[float]) -> List["Var"]:
        return [self.variable(v) for v in values]

    def constant(self, value: float) -> "Var":
        return Var(self, self._append(Op.CONST, (), float(value)))

    def lift(self, x: "Scalar") -> "Var":
        if isinstance(x, Var):
            if x.tape is not self:
                raise ValueError("operands belong to different tapes")
            return x
        return self.constant(x)

    def apply(self, op: Op, *operands: "Var") -> "Var":
        args = tuple(v.index for v in operands)
        values = [self.nodes[i].value for i in args]
        try:
            value = _FORWARD[op](*values)
        except (ZeroDivisionError, ValueError, OverflowError) as exc:
            raise NonFiniteValue(f"node {len(self.nodes)} ({op.value}) failed: {exc}") from exc
        return Var(self, self._append(op, args, value))

    def _append(self, op: Op, args: Tuple[int, ...], value: float) -> int:
        index = len(self.nodes)
        if not math.isfinite(value):
            raise NonFiniteValue(f"node {index} ({op.value}) evaluated to {value!r}")
        order = self._order
        for a in args:
            if self.nodes[a].order > order:
                order = self.nodes[a].order
        self.nodes.append(Node(op, args, value, order))
        return index

    def root(self, index: Optional[int] = None) -> "Var":
        if not self.nodes:
            raise DimensionError("empty tape has no root")
        return Var(self, len(self.nodes) - 1 if index is None else index)

    # ---------------- replay ----------------

    def replay(self, leaf_values: Sequence[float], root: Optional[int] = None) -> float:
        """Re-evaluate every node with new leaf values; cached values are overwritten.

        Recorded gradient nodes encode the max/abs branches taken at record time,
        so a tape holding them cannot be replayed; record it again instead.
        """
        if any(node.order for node in self.nodes):
            raise UnsupportedDepth("tape holds recorded gradient nodes; record it again for new leaf values")
        if len(leaf_values) != len(self.leaves):
            raise DimensionError(f"tape has {len(self.leaves)} leaves, got {len(leaf_values)} values")
        position = 0
        for index, node in enumerate(self.nodes):
            if node.op is Op.VAR:
                value = float(leaf_values[position])
                position += 1
            elif node.op is Op.CONST:
                value = node.value
            else:
                try:
                    value = _FORWARD[node.op](*(self.nodes[a].value for a in node.args))
                except (ZeroDivisionError, ValueError, OverflowError) as exc:
                    raise NonFiniteValue(f"node {index} ({node.op.value}) failed: {exc}") from exc
            if not math.isfinite(value):
                raise NonFiniteValue(f"node {index} ({node.op.value}) evaluated to {value!r}")
            node.value = value
        return self.root(root).value

    # ---------------- reverse mode ----------------

    def grad(self, root: "Var", wrt: Sequence["Var"], create_graph: bool = False) -> list:
        """Gradient of ``root`` with respect to each of ``wrt``.

        With ``create_graph`` the adjoints are recorded as tape nodes (order 1)
        and returned as ``Var``; otherwise plain floats are returned.
        """
        r = root.index
        root_order = self.nodes[r].order
        if create_graph and root_order >= 1:
            raise UnsupportedDepth("a recorded gradient can be differentiated once, not recorded again")
        if root_order > 1:
            raise UnsupportedDepth(f"node {r} has order {root_order}; at most two levels are supported")

        targets = {v.index for v in wrt}
        order, needs = self._reachable(r, targets)
        if create_graph:
            saved = self._order
            self._order = root_order + 1
            try:
                adj = self._backward(r, order, needs, self.constant(1.0), recorded=True)
                zero = self.constant(0.0)
            finally:
                self._order = saved
        else:
            adj = self._backward(r, order, needs, 1.0, recorded=False)
            zero = 0.0
        return [adj.get(v.index, zero) for v in wrt]

    def _reachable(self, r: int, targets: Set[int]) -> Tuple[List[int], Set[int]]:
        seen = {r}
        stack = [r]
        while stack:
            for a in self.nodes[stack.pop()].args:
                if a not in seen:
                    seen.add(a)
                    stack.append(a)
        order = sorted(seen)
        needs: Set[int] = set()
        for i in order:
            if i in targets or any(a in needs for a in self.nodes[i].args):
                needs.add(i)
        return order, needs

    def _backward(self, r: int, order: List[int], needs: Set[int], seed, recorded: bool) -> dict:
        adj = {r: seed}
        for i in reversed(order):
            if i not in needs:
                continue
            g = adj.get(i)
            if g is None:
                continue
            node = self.nodes[i]
            for p, a in enumerate(node.args):
                if a not in needs:
                    continue
                contribution = self._local(i, node, p, g, recorded)
                if contribution is None:
                    continue
                adj[a] = adj[a] + contribution if a in adj else contribution
        return adj

    def _local(self, i: int, node: Node, p: int, g, recorded: bool):
        """Adjoint contribution of ``node`` to its operand at position ``p``."""
        op = node.op
        if op is Op.ADD:
            return g
        if op is Op.SUB:
            return g if p == 0 else -g
        if op is Op.NEG:
            return -g

        va = self.nodes[node.args[0]].value
        if op is Op.MAX:
            chosen = 0 if va >= self.nodes[node.args[1]].value else 1
            return g if p == chosen else None
        if op is Op.ABS:
            # subgradient 0 at the kink
            if va > 0.0:
                return g
            if va < 0.0:
                return -g
            return None
        if op is Op.SQRT and node.value == 0.0:
            return None

        if recorded:
            a = Var(self, node.args[0])
            b = Var(self, node.args[1]) if len(node.args) > 1 else None
            out = Var(self, i)
        else:
            a = va
            b = self.nodes[node.args[1]].value if len(node.args) > 1 else None
            out = node.value

        if op is Op.MUL:
            return g * (b if p == 0 else a)
        if op is Op.DIV:
            return g / b if p == 0 else -((g / b) * out)
        if op is Op.SQUARE:
            return g * (2.0 * a)
        if op is Op.SQRT:
            return g * (0.5 / out)
        if op is Op.TANH:
            return g * (1.0 - out * out)
        raise ValueError(f"no derivative rule for {op.value}")


class Var:
    """Handle to a tape node; arithmetic records new nodes."""

    __slots__ = ("tape", "index")

    def __init__(self, tape: Tape, index: int) -> None:
        self.tape = tape
        self.index = index

    @property
    def value(self) -> float:
        return self.tape.nodes[self.index].value

    @property
    def order(self) -> int:
        return self.tape.nodes[self.index].order

    def _binary(self, op: Op, other: "Scalar", reverse: bool = False) -> "Var":
        other = self.tape.lift(other)
        if reverse:
            return self.tape.apply(op, other, self)
        return self.tape.apply(op, self, other)

    def __add__(self, other):
        return self._binary(Op.ADD, other)

    def __radd__(self, other):
        return self._binary(Op.ADD, other, reverse=True)

    def __sub__(self, other):
        return self._binary(Op.SUB, other)

    def __rsub__(self, other):
        return self._binary(Op.SUB, other, reverse=True)

    def __mul__(self, other):
        return self._binary(Op.MUL, other)

    def __rmul__(self, other):
        return self._binary(Op.MUL, other, reverse=True)

    def __truediv__(self, other):
        return self._binary(Op.DIV, other)

    def __rtruediv__(self, other):
        return self._binary(Op.DIV, other, reverse=True)

    def __neg__(self):
        return self.tape.apply(Op.NEG, self)

    def __repr__(self) -> str:
        node = self.tape.nodes[self.index]
        return f"Var(#{self.index} {node.op.value}={node.value!r})"


Scalar = Union[float, Var]


# Elementary functions accepting floats or tape values. Float inputs use the
# same IEEE operations the tape records, so both paths agree bit for bit.

def maximum(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, Var):
        return a.tape.apply(Op.MAX, a, a.tape.lift(b))
    if isinstance(b, Var):
        return b.tape.apply(Op.MAX, b.tape.lift(a), b)
    return a if a >= b else b


def absolute(a: Scalar) -> Scalar:
    if isinstance(a, Var):
        return a.tape.apply(Op.ABS, a)
    return abs(a)


def square(a: Scalar) -> Scalar:
    if isinstance(a, Var):
        return a.tape.apply(Op.SQUARE, a)
    return a * a


def sqrt(a: Scalar) -> Scalar:
    if isinstance(a, Var):
        return a.tape.apply(Op.SQRT, a)
    return math.sqrt(a)


def tanh(a: Scalar) -> Scalar:
    if isinstance(a, Var):
        return a.tape.apply(Op.TANH, a)
    return math.tanh(a)


# ---------------- functional surface ----------------

def evaluate(tape: Tape, leaf_values: Sequence[float], root: Optional[int] = None) -> float:
    return tape.replay(leaf_values, root)


def gradient(tape: Tape, leaf_values: Sequence[float], wrt: Sequence[int],
             root: Optional[int] = None) -> GradResult:
    """Value and gradient of the root w.r.t. the leaves at positions ``wrt``."""
    value = tape.replay(leaf_values, root)
    try:
        leaves = [Var(tape, tape.leaves[j]) for j in wrt]
    except IndexError as exc:
        raise DimensionError(f"leaf position out of range (tape has {len(tape.leaves)} leaves)") from exc
    grads = tape.grad(tape.root(root), leaves)
    return GradResult(value, np.asarray(grads, dtype=np.float64))


def nested_gradient(
    inner: Callable[[List[Var], List[Var]], Scalar],
    outer: Callable[[Scalar, List[Var]], Scalar],
    params: Sequence[float],
    inputs: Sequence[float],
) -> GradResult:
    """d outer(y, dy/dx) / d params, where y = inner(params, inputs)."""
    tape = Tape()
    p = tape.variables(params)
    x = tape.variables(inputs)
    y = inner(p, x)
    if not isinstance(y, Var):
        y = tape.constant(y)
    k = tape.grad(y, x, create_graph=True)
    out = outer(y, k)
    if not isinstance(out, Var):
        return GradResult(float(out), np.zeros(len(p)))
    return GradResult(out.value, np.asarray(tape.grad(out, p), dtype=np.float64))


def finite_diff(f: Callable[[np.ndarray], float], x: Sequence[float], h: float = 1e-5) -> np.ndarray:
    """Central-difference gradient estimate of ``f`` at ``x``."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    grad = np.zeros(x.shape[0])
    e = np.zeros(x.shape[0])
    for j in range(x.shape[0]):
        e[j] = h
        grad[j] = (f(x + e) - f(x - e)) / (2.0 * h)
        e[j] = 0.0
    return grad
