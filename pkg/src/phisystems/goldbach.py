"""Prime-pair and prime-triple parametrizations of Goldbach-style sums.

Even totals 2n are split as (n - x, n + x) for x in [0, n - 3]. The same
split set appears three more ways: as solutions of
nu((x' - 2n)(4n - x')) = 2 on the shifted interval (2n + 1, 4n - 1), as
the paired totient equations phi(n - x) + 1 = n - x and
phi(n + x) + 1 = n + x, and as paired Fermat-congruence certifications
of n - x and n + x.

Odd totals n > 5 are split as triples (n - x - y, 2x - n, n - x + y)
under the chain 0 <= y < x < x + y + 2 < n + 1 < 2x. The middle
component 2x - n is odd by parity and plays a designated role: a sum
like 19 = 3 + 5 + 11 yields one witness per valid middle choice.
Restricting the product of the first two components to multiples of 3
ties the triple form back to the pair form at total n - 3.
"""

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .arith import SpfTable
from .certify import VerdictTable, certify_verdict

__all__ = [
    "BinaryWitness",
    "TernaryWitness",
    "binary_count",
    "binary_solutions",
    "decomposition_to_xy",
    "fermat_system_solutions",
    "first_binary_witness",
    "first_peculiar_witness",
    "first_ternary_witness",
    "peculiar_count",
    "peculiar_solutions",
    "proposition_check",
    "raw_form_solutions",
    "substitution_bijection_check",
    "ternary_count",
    "ternary_solutions",
    "two_prime_sum_exists",
]


@dataclass(frozen=True, slots=True)
class BinaryWitness:
    """A split 2n = p + q with p = n - x, q = n + x, both prime."""

    n: int
    x: int
    p: int
    q: int


@dataclass(frozen=True, slots=True)
class TernaryWitness:
    """A split n = p + q + r with p = n-x-y, q = 2x-n, r = n-x+y, all prime."""

    n: int
    x: int
    y: int
    p: int
    q: int
    r: int


def _validate_pair_n(n: int, table: SpfTable) -> None:
    if n < 2:
        raise ValueError(f"defined for n >= 2, got {n}")
    if 2 * n > table.limit:
        raise ValueError(
            f"n = {n} needs the sieve through {2 * n}, table stops at {table.limit}"
        )


def _validate_odd_n(n: int, table: SpfTable) -> None:
    if n <= 5 or n % 2 == 0:
        raise ValueError(f"defined for odd n > 5, got {n}")
    if n > table.limit:
        raise ValueError(f"n = {n} is beyond the table limit {table.limit}")


def binary_solutions(n: int, table: SpfTable) -> list[BinaryWitness]:
    """All x in [0, n-3] with n - x and n + x both prime, ascending.

    For n = 2 that range is empty although 4 = 2 + 2; the scan is extended
    to x = 0 there so the lone split of 4 is reported.
    """
    _validate_pair_n(n, table)
    if n == 2:
        return [BinaryWitness(n=2, x=0, p=2, q=2)]
    mask = table.is_prime_mask
    both = mask[n : 2 * n - 2] & mask[3 : n + 1][::-1]
    return [
        BinaryWitness(n=n, x=x, p=n - x, q=n + x)
        for x in np.nonzero(both)[0].tolist()
    ]


def binary_count(n: int, table: SpfTable) -> int:
    """len(binary_solutions(n)) without materializing witnesses."""
    _validate_pair_n(n, table)
    if n == 2:
        return 1
    mask = table.is_prime_mask
    return int(np.count_nonzero(mask[n : 2 * n - 2] & mask[3 : n + 1][::-1]))


def first_binary_witness(n: int, table: SpfTable) -> BinaryWitness | None:
    """Lowest-x witness, scanning only the viable parity class of x."""
    _validate_pair_n(n, table)
    if n == 2:
        return BinaryWitness(n=2, x=0, p=2, q=2)
    b = table.is_prime_bytes
    # n - x and n + x must be odd primes here, so x has parity opposite to n
    x = 0 if n % 2 else 1
    while x <= n - 3:
        if b[n - x] and b[n + x]:
            return BinaryWitness(n=n, x=x, p=n - x, q=n + x)
        x += 2
    return None


def raw_form_solutions(n: int, table: SpfTable) -> list[int]:
    """All x in (2n+1, 4n-1) with nu((x - 2n)(4n - x)) = 2, ascending.

    Both factors exceed 1 on that interval, so nu = 2 forces both prime.
    nu of the product is evaluated as nu(x - 2n) + nu(4n - x), which is
    exact because nu is completely additive.
    """
    _validate_pair_n(n, table)
    seg = table.nu_values[2 : 2 * n - 1]
    total = seg + seg[::-1]
    return (np.nonzero(total == 2)[0] + (2 * n + 2)).tolist()


def substitution_bijection_check(n: int, table: SpfTable) -> bool:
    """Whether x -> 3n - x carries the raw-form x-set onto the binary x-set.

    The raw interval sees each unordered pair from both sides: binary
    witness z > 0 corresponds to raw solutions 3n - z and 3n + z, while
    z = 0 corresponds to 3n alone. Images are folded by absolute value
    and the two-to-one multiplicity off zero is required exactly.
    """
    if n < 3:
        raise ValueError(f"defined for n >= 3, got {n}")
    folded = Counter(abs(3 * n - x) for x in raw_form_solutions(n, table))
    expected = {w.x: (1 if w.x == 0 else 2) for w in binary_solutions(n, table)}
    return folded == expected


def fermat_system_solutions(
    n: int, table: SpfTable, *, verdicts: VerdictTable | None = None
) -> list[int]:
    """All x in [0, n-3] where both n - x and n + x certify as prime.

    Each side runs the congruence system with its own bound: primes
    p <= isqrt(n - x) and q <= isqrt(n + x). Passing a VerdictTable
    reuses one certification per distinct value, which range sweeps need;
    without it every x re-runs both systems directly.
    """
    if n <= 3:
        raise ValueError(f"defined for n > 3, got {n}")
    if verdicts is not None:
        arr = verdicts.ensure(2 * n - 3)
        both = arr[n : 2 * n - 2] & arr[3 : n + 1][::-1]
        return np.nonzero(both)[0].tolist()
    out = []
    for x in range(0, n - 2):
        if certify_verdict(n - x, table)[0] and certify_verdict(n + x, table)[0]:
            out.append(x)
    return out


def _pair_count(s: int, mask: np.ndarray) -> int:
    """Number of splits s = p + r with p <= r both prime, s even >= 4."""
    m = s // 2
    return int(np.count_nonzero(mask[2 : m + 1][::-1] & mask[m : 2 * m - 1]))


def _first_pair_y(s: int, prime_bytes: bytes) -> int | None:
    """Smallest y >= 0 with s/2 - y and s/2 + y both prime, s even >= 4."""
    m = s // 2
    if m == 2:
        return 0  # 4 = 2 + 2
    # p = m - y and r = m + y must be odd primes once m > 2, fixing y's parity;
    # y = m - 2 would put p = 2 against an even r > 2, so stop at m - 3
    y = 0 if m % 2 else 1
    while y <= m - 3:
        if prime_bytes[m - y] and prime_bytes[m + y]:
            return y
        y += 2
    return None


def _odd_prime_bound(n: int, table: SpfTable) -> int:
    """Index bounding the odd primes q <= n - 4 usable as a middle component."""
    return bisect_right(table.prime_list, n - 4)


def ternary_solutions(n: int, table: SpfTable) -> list[TernaryWitness]:
    """Every (x, y) on the chain with all three components prime, by (x, y).

    x ascending is the middle prime q = 2x - n ascending; for fixed q the
    remaining even total n - q splits as (p, r) = ((n-q)/2 - y, (n-q)/2 + y).
    """
    _validate_odd_n(n, table)
    mask = table.is_prime_mask
    plist = table.prime_list
    out: list[TernaryWitness] = []
    for i in range(1, _odd_prime_bound(n, table)):
        q = plist[i]
        m = (n - q) // 2
        pair = mask[2 : m + 1][::-1] & mask[m : 2 * m - 1]
        x = (n + q) // 2
        for y in np.nonzero(pair)[0].tolist():
            out.append(TernaryWitness(n=n, x=x, y=y, p=m - y, q=q, r=m + y))
    return out


def ternary_count(n: int, table: SpfTable) -> int:
    """len(ternary_solutions(n)) without materializing witnesses."""
    _validate_odd_n(n, table)
    mask = table.is_prime_mask
    plist = table.prime_list
    return sum(
        _pair_count(n - plist[i], mask) for i in range(1, _odd_prime_bound(n, table))
    )


def first_ternary_witness(n: int, table: SpfTable) -> TernaryWitness | None:
    _validate_odd_n(n, table)
    b = table.is_prime_bytes
    plist = table.prime_list
    for i in range(1, _odd_prime_bound(n, table)):
        q = plist[i]
        y = _first_pair_y(n - q, b)
        if y is not None:
            m = (n - q) // 2
            return TernaryWitness(n=n, x=(n + q) // 2, y=y, p=m - y, q=q, r=m + y)
    return None


def peculiar_solutions(n: int, table: SpfTable) -> list[TernaryWitness]:
    """The witnesses whose first two components multiply to a multiple of 3.

    Since p and q are prime, p * q == 0 (mod 3) means p = 3 or q = 3.
    """
    return [w for w in ternary_solutions(n, table) if (w.p * w.q) % 3 == 0]


def peculiar_count(n: int, table: SpfTable) -> int:
    """len(peculiar_solutions(n)) without enumerating all triples."""
    _validate_odd_n(n, table)
    mask = table.is_prime_mask
    # q = 3 branch: any pair split of n - 3 qualifies
    count = _pair_count(n - 3, mask)
    # p = 3 branch with q != 3: r = n - q - 3 must be prime and >= p = 3
    primes = table.primes
    qs = primes[2 : int(np.searchsorted(primes, n - 4, side="right"))]
    if len(qs):
        rs = n - 3 - qs
        rs = rs[rs >= 3]
        count += int(np.count_nonzero(mask[rs]))
    return count


def first_peculiar_witness(n: int, table: SpfTable) -> TernaryWitness | None:
    """Lexicographically first peculiar witness, or None.

    q = 3 minimizes x, so its lowest-y witness is the global first. The
    p = 3 fallback can only produce a witness when the q = 3 branch does
    too; it is kept so the function never relies on that implication.
    """
    _validate_odd_n(n, table)
    b = table.is_prime_bytes
    y = _first_pair_y(n - 3, b)
    if y is not None:
        m = (n - 3) // 2
        return TernaryWitness(n=n, x=(n + 3) // 2, y=y, p=m - y, q=3, r=m + y)
    plist = table.prime_list
    for i in range(2, _odd_prime_bound(n, table)):
        q = plist[i]
        r = n - q - 3
        if r >= 3 and b[r]:
            m = (n - q) // 2
            return TernaryWitness(n=n, x=(n + q) // 2, y=m - 3, p=3, q=q, r=r)
    return None


def two_prime_sum_exists(total: int, table: SpfTable) -> bool:
    """Whether total = p + q for primes p <= q, including 2 + 2 = 4."""
    if total > table.limit:
        raise ValueError(f"total {total} is beyond the table limit {table.limit}")
    if total < 4:
        return False
    b = table.is_prime_bytes
    plist = table.prime_list
    for i in range(bisect_right(plist, total // 2)):
        if b[total - plist[i]]:
            return True
    return False


def proposition_check(n: int, table: SpfTable) -> bool:
    """Equivalence at a single odd n > 5: a triple split containing the
    prime 3 exists iff n - 3 is a sum of two primes (2 + 2 included)."""
    _validate_odd_n(n, table)
    has_triple_with_3 = first_peculiar_witness(n, table) is not None
    return has_triple_with_3 == two_prime_sum_exists(n - 3, table)


def decomposition_to_xy(p: int, q: int, r: int, n: int) -> tuple[int, int]:
    """Invert a canonical triple (p <= r, odd middle q) to its (x, y).

    x = (n + q) / 2 and y = (r - p) / 2, both integral under the parity
    preconditions; the witness definition then maps (x, y) back onto
    (p, q, r) and the chain 0 <= y < x < x+y+2 < n+1 < 2x holds.
    """
    for name, v in (("p", p), ("q", q), ("r", r)):
        if v < 2:
            raise ValueError(f"{name} must be a prime >= 2, got {v}")
    if p + q + r != n:
        raise ValueError(f"p + q + r = {p + q + r} != n = {n}")
    if n % 2 == 0 or n <= 5:
        raise ValueError(f"n must be odd and > 5, got {n}")
    if q % 2 == 0:
        raise ValueError(f"the middle component must be odd, got {q}")
    if p > r:
        raise ValueError(f"expected p <= r, got p = {p}, r = {r}")
    if (r - p) % 2:
        raise ValueError(f"p and r must share parity, got {p} and {r}")
    return (n + q) // 2, (r - p) // 2
