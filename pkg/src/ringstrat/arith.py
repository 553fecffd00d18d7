"""Trial-division integer helpers."""
from .errors import InvalidParameter


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def factor_integer(n):
    """Ascending ``[(p, e), ...]`` with ``prod(p**e) == n``; requires n >= 2."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParameter(f"cannot factor {n!r}: need an integer >= 2")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def valuation(p, n):
    """Exponent of p in n; n must be nonzero."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def is_squarefree(n):
    n = abs(n)
    if n == 0:
        return False
    if n == 1:
        return True
    return all(e == 1 for _, e in factor_integer(n))
