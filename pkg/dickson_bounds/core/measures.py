"""Minima and the measures driving the descent towards a Dickson bound."""

from __future__ import annotations

import dataclasses

from dickson_bounds.seq.seq import NatFunction, scan_stop
from dickson_bounds.utils.exceptions import ContractError
from dickson_bounds.utils.utils import checked_add, checked_pow


def mini(f: NatFunction, n: int) -> int:
    """
    Get the first index where `f` is minimal on ``0, ..., n``.

    Parameters
    ----------
    f
        Function to inspect.
    n
        Last index of the range.

    Returns
    -------
    int
        Least index of a minimal value.
    """
    return min(range(scan_stop(f, n) + 1), key=f.eval)


def psi(f: NatFunction, g: NatFunction, n: int) -> int:
    """
    Get the larger of the cross values at the minima of `f` and `g`.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Last index of the range.

    Returns
    -------
    int
        ``max(f[Mini(g, n)], g[Mini(f, n)])``.
    """
    return max(f.eval(mini(g, n)), g.eval(mini(f, n)))


def phi(f: NatFunction, g: NatFunction, n: int) -> int:
    """
    Get the descent measure, the sum of the minima of `f` and `g` up to `n`.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Last index of the range.

    Returns
    -------
    int
        ``f[Mini(f, n)] + g[Mini(g, n)]``.
    """
    return checked_add(
        f.eval(mini(f, n)), g.eval(mini(g, n)), quantity=f"Φ(n) at n={n}"
    )


def big_i(f: NatFunction, g: NatFunction, n: int) -> int:
    """
    Get the end of the window inspected by the descent step at `n`.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    n
        Current index.

    Returns
    -------
    int
        ``n + psi(n)**2 + 1``, always greater than `n`.
    """
    square = checked_pow(psi(f, g, n), 2, f"Ψ(n)² at n={n}")
    return checked_add(n, square, 1, quantity=f"I(n) at n={n}")


@dataclasses.dataclass(frozen=True)
class ThreeFnMeasures:
    """
    Measures for three functions at an index.

    Parameters
    ----------
    n
        Index the measures were computed at.
    phi3
        Sum of the three minima up to `n`.
    psi3
        Maximum of the six cross values at the minima.
    i3
        ``n + psi3**4 + 1``.
    """

    n: int
    phi3: int
    psi3: int
    i3: int

    def __post_init__(self) -> None:
        """Check window end is consistent with `psi3`."""
        if self.i3 != self.n + self.psi3**4 + 1:
            raise ContractError(
                f"i3={self.i3} differs from n + psi3⁴ + 1 at n={self.n}, "
                f"psi3={self.psi3}"
            )


def three_fn_measures(
    f: NatFunction, g: NatFunction, h: NatFunction, n: int
) -> ThreeFnMeasures:
    """
    Compute the three-function analogues of Φ, Ψ and I.

    Parameters
    ----------
    f
        First function.
    g
        Second function.
    h
        Third function.
    n
        Last index of the range.

    Returns
    -------
    ThreeFnMeasures
        Measures at `n`.
    """
    minima = {name: mini(func, n) for name, func in (("f", f), ("g", g), ("h", h))}
    funcs = {"f": f, "g": g, "h": h}

    phi3 = checked_add(
        *(funcs[name].eval(index) for name, index in minima.items()),
        quantity=f"Φ₃(n) at n={n}",
    )
    psi3 = max(
        funcs[name].eval(minima[other])
        for name in funcs
        for other in funcs
        if other != name
    )
    fourth = checked_pow(psi3, 4, f"Ψ₃(n)⁴ at n={n}")
    i3 = checked_add(n, fourth, 1, quantity=f"I₃(n) at n={n}")
    return ThreeFnMeasures(n=n, phi3=phi3, psi3=psi3, i3=i3)
