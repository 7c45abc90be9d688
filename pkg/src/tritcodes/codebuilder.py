"""Assembly of the cyclic code C_(u,v) and the sphere-packing ceiling.

The code of interest has length n = 3^m - 1, nonzeros pi^u and pi^v with
u = (3^m + 1)/2 and v = 2*3^ell + 1 (m = 2*ell + 1), and generator
polynomial m_u(x) * m_v(x).  The code object stores the generator
polynomial only; membership is polynomial divisibility, which keeps
n = 3^13 - 1 instances cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import polyring
from .exceptions import CosetCollision, LengthMismatch
from .gf3m import FieldCtx


@dataclass(frozen=True)
class CyclicCode:
    n: int
    u: int
    v: int
    gen: tuple[int, ...]
    k: int
    ctx: FieldCtx

    @property
    def m(self) -> int:
        return self.ctx.m

    def to_json_dict(self) -> dict:
        return {
            "m": self.ctx.m,
            "n": self.n,
            "k": self.k,
            "u": self.u,
            "v": self.v,
            "modulus": polyring.format_poly(self.ctx.modulus),
            "generator": polyring.format_poly(self.gen),
        }


def exponent_pair(m: int) -> tuple[int, int]:
    """(u, v) = ((3^m + 1)/2, 2*3^ell + 1) for m = 2*ell + 1."""
    ell = (m - 1) // 2
    return (3**m + 1) // 2, 2 * 3**ell + 1


def build_code(ctx: FieldCtx) -> CyclicCode:
    """Construct C_(u,v) over the given field context."""
    m = ctx.m
    n = ctx.order
    u, v = exponent_pair(m)
    cos_u = polyring.cyclotomic_coset(u, m)
    cos_v = polyring.cyclotomic_coset(v, m)
    if len(cos_u) != m or len(cos_v) != m:
        raise CosetCollision(
            f"coset sizes |C_u|={len(cos_u)}, |C_v|={len(cos_v)}, expected {m}"
        )
    if set(cos_u.members) & set(cos_v.members):
        raise CosetCollision(f"C_{u} and C_{v} intersect mod {n}")
    gen = polyring.poly_mul(
        polyring.minimal_polynomial(u, ctx), polyring.minimal_polynomial(v, ctx)
    )
    k = n - polyring.degree(gen)
    if k != n - 2 * m or gen[-1] != 1:
        raise CosetCollision(f"generator degree {polyring.degree(gen)} != 2m")
    # g | x^n - 1, checked via x^n mod g == 1 (square-and-multiply)
    if polyring.poly_pow_mod(polyring.X, n, gen) != polyring.ONE:
        raise CosetCollision("generator polynomial does not divide x^n - 1")
    return CyclicCode(n=n, u=u, v=v, gen=gen, k=k, ctx=ctx)


def is_codeword(word, code: CyclicCode) -> bool:
    """True iff the polynomial of the length-n word is divisible by gen."""
    if len(word) != code.n:
        raise LengthMismatch(f"word length {len(word)} != n={code.n}")
    return polyring.poly_mod(polyring.normalize(word), code.gen) == polyring.ZERO


def encode(message, code: CyclicCode) -> tuple[int, ...]:
    """Message polynomial times gen, padded to length n (test codewords only)."""
    prod = polyring.poly_mul(polyring.normalize(message), code.gen)
    if len(prod) > code.n:
        raise LengthMismatch(f"message degree too large for n={code.n}")
    return tuple(prod) + (0,) * (code.n - len(prod))


def cyclic_shift(word, positions: int = 1):
    positions %= len(word)
    return tuple(word[-positions:]) + tuple(word[:-positions])


def hamming_ball_volume(n: int, r: int, q: int) -> int:
    """Number of words within Hamming distance r; exact big-integer arithmetic."""
    return sum(comb(n, i) * (q - 1) ** i for i in range(r + 1))


def sphere_packing_max_d(n: int, k: int, q: int) -> int:
    """Largest minimum distance an [n, k] code over GF(q) can have.

    Sphere packing: the radius-floor((d-1)/2) ball volume must not exceed
    q^(n-k).  The ball condition alone never rules out d = 2, so the
    Singleton bound d <= n - k + 1 is applied on top (this is what makes
    the zero-redundancy case return 1).
    """
    if not (1 <= k <= n) or q < 2:
        raise ValueError(f"need 1 <= k <= n and q >= 2, got n={n}, k={k}, q={q}")
    bound = q ** (n - k)
    r = 0
    while hamming_ball_volume(n, r + 1, q) <= bound:
        r += 1
    return min(2 * r + 2, n - k + 1)
