"""Forward-mode differentiation with complex dual scalars.

A Dual carries a value and the derivative of that value with respect to
one chosen input.  Arithmetic propagates both parts, so any function
written with +, -, *, / and sqrt can be differentiated by seeding the
input with ``deriv=1`` and reading off ``.deriv`` at the end.  Both
parts are complex here because the reflection coefficients get
differentiated at points on the imaginary wavenumber axis.
"""

import cmath
from dataclasses import dataclass

__all__ = ["Dual", "sqrt", "value_of", "derivative"]


@dataclass(frozen=True)
class Dual:
    value: complex
    deriv: complex = 0.0

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value + other.value, self.deriv + other.deriv)
        return Dual(self.value + other, self.deriv)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value - other.value, self.deriv - other.deriv)
        return Dual(self.value - other, self.deriv)

    def __rsub__(self, other):
        return Dual(other - self.value, -self.deriv)

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value * other.value,
                        self.deriv * other.value + self.value * other.deriv)
        return Dual(self.value * other, self.deriv * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            v = self.value / other.value
            return Dual(v, (self.deriv - v * other.deriv) / other.value)
        return Dual(self.value / other, self.deriv / other)

    def __rtruediv__(self, other):
        v = other / self.value
        return Dual(v, -v * self.deriv / self.value)

    def __neg__(self):
        return Dual(-self.value, -self.deriv)


def sqrt(x):
    """Principal square root for plain numbers and for Dual scalars."""
    if isinstance(x, Dual):
        root = cmath.sqrt(x.value)
        return Dual(root, x.deriv / (2.0 * root))
    return cmath.sqrt(x)


def value_of(x):
    """The plain numeric value of x, stripping the derivative part if any."""
    return x.value if isinstance(x, Dual) else x


def derivative(func, at):
    """Value and first derivative of func at the (possibly complex) point at."""
    out = func(Dual(at, 1.0))
    if isinstance(out, Dual):
        return out.value, out.deriv
    return out, 0.0
