"""Dense univariate polynomials in ``q`` with Python integer coefficients."""

from __future__ import annotations


class Polynomial:
    """Coefficients stored low degree first: ``coeffs[i]`` multiplies ``q**i``.

    Trailing zeros are kept so that a chromatic polynomial of a graph on
    ``n`` vertices always has ``n + 1`` stored coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(int(c) for c in coeffs) or (0,)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _trimmed(self) -> tuple[int, ...]:
        return self.coeffs[: max(self.degree + 1, 1)]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._trimmed() == other._trimmed()
        return NotImplemented

    def __hash__(self):
        return hash(self._trimmed())

    def __add__(self, other: Polynomial) -> Polynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(m))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(terms) if terms else "0"
