import typing as T

import numpy as np


def _unbroadcast(grad: np.ndarray, shape: T.Tuple[int, ...]) -> np.ndarray:
    if grad.shape == shape:
        return grad
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


class Var:
    """A node of the reverse-mode tape holding a float64 array.

    Every operation records a closure that pushes the incoming gradient into the
    parents' `grad`. Constants (requires_grad=False) are never traversed. A tape is
    built by one loss evaluation and must not be shared between evaluations.
    """

    __slots__ = ("value", "grad", "requires_grad", "prev", "_backward")

    def __init__(self, value, prev=(), requires_grad: bool = False):
        self.value = np.asarray(value, dtype=np.float64)
        self.grad: T.Optional[np.ndarray] = None
        self.requires_grad = requires_grad
        self.prev = prev
        self._backward: T.Optional[T.Callable[[np.ndarray], None]] = None

    def __repr__(self):
        return f"Var(shape={self.value.shape}, requires_grad={self.requires_grad})"

    @property
    def shape(self) -> T.Tuple[int, ...]:
        return self.value.shape

    def _accumulate(self, grad: np.ndarray) -> None:
        if not self.requires_grad:
            return
        grad = _unbroadcast(grad, self.value.shape)
        if self.grad is None:
            self.grad = np.array(grad, dtype=np.float64)
        else:
            self.grad = self.grad + grad

    def _result(self, value, parents, backward) -> "Var":
        parents = tuple(p for p in parents if p.requires_grad)
        output = Var(value, prev=parents, requires_grad=bool(parents))
        if output.requires_grad:
            output._backward = backward
        return output

    # Arithmetic

    def __add__(self, other) -> "Var":
        other = as_var(other)

        def backward(g):
            self._accumulate(g)
            other._accumulate(g)

        return self._result(self.value + other.value, (self, other), backward)

    __radd__ = __add__

    def __sub__(self, other) -> "Var":
        other = as_var(other)

        def backward(g):
            self._accumulate(g)
            other._accumulate(-g)

        return self._result(self.value - other.value, (self, other), backward)

    def __rsub__(self, other) -> "Var":
        return as_var(other) - self

    def __neg__(self) -> "Var":
        def backward(g):
            self._accumulate(-g)

        return self._result(-self.value, (self,), backward)

    def __mul__(self, other) -> "Var":
        other = as_var(other)

        def backward(g):
            self._accumulate(g * other.value)
            other._accumulate(g * self.value)

        return self._result(self.value * other.value, (self, other), backward)

    __rmul__ = __mul__

    def __truediv__(self, other: float) -> "Var":
        if isinstance(other, Var):
            raise TypeError("Division is only supported by constants")
        return self * (1.0 / other)

    def matmul_t(self, weight: "Var") -> "Var":
        """self @ weight.T, with self of shape (B, n_in) and weight of shape (n_out, n_in)."""

        def backward(g):
            self._accumulate(g @ weight.value)
            weight._accumulate(g.T @ self.value)

        return self._result(self.value @ weight.value.T, (self, weight), backward)

    # Elementwise functions

    def tanh(self) -> "Var":
        value = np.tanh(self.value)

        def backward(g):
            self._accumulate(g * (1.0 - value**2))

        return self._result(value, (self,), backward)

    def sin(self) -> "Var":
        def backward(g):
            self._accumulate(g * np.cos(self.value))

        return self._result(np.sin(self.value), (self,), backward)

    def cos(self) -> "Var":
        def backward(g):
            self._accumulate(-g * np.sin(self.value))

        return self._result(np.cos(self.value), (self,), backward)

    def relu(self) -> "Var":
        mask = (self.value > 0.0).astype(np.float64)

        def backward(g):
            self._accumulate(g * mask)

        return self._result(np.maximum(self.value, 0.0), (self,), backward)

    def square(self) -> "Var":
        return self * self

    # Reductions and reshaping

    def sum(self, axis: T.Optional[int] = None) -> "Var":
        shape = self.value.shape

        def backward(g):
            if axis is None:
                self._accumulate(np.broadcast_to(g, shape))
            else:
                self._accumulate(np.broadcast_to(np.expand_dims(g, axis), shape))

        return self._result(self.value.sum(axis=axis), (self,), backward)

    def mean(self) -> "Var":
        return self.sum() * (1.0 / self.value.size)

    def reshape(self, *shape) -> "Var":
        original = self.value.shape

        def backward(g):
            self._accumulate(g.reshape(original))

        return self._result(self.value.reshape(*shape), (self,), backward)

    def column(self, index: int) -> "Var":
        original = self.value.shape

        def backward(g):
            full = np.zeros(original)
            full[:, index] = g
            self._accumulate(full)

        return self._result(self.value[:, index], (self,), backward)

    # Backpropagation

    def backward(self) -> None:
        if self.value.size != 1:
            raise ValueError("backward() requires a scalar output")
        self.grad = np.ones_like(self.value)

        topo = []
        visited = set()
        stack = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                topo.append(node)
                continue
            if id(node) in visited:
                continue
            visited.add(id(node))
            stack.append((node, True))
            for child in reversed(node.prev):
                if id(child) not in visited:
                    stack.append((child, False))

        for node in reversed(topo):
            if node._backward is not None and node.grad is not None:
                node._backward(node.grad)


def as_var(value) -> Var:
    return value if isinstance(value, Var) else Var(value)


def leaf(value) -> Var:
    return Var(np.array(value, dtype=np.float64), requires_grad=True)
