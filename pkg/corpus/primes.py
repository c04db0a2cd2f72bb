"""Prime number helpers built on trial division and a sieve."""


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


def sieve(limit):
    """All primes below limit via Eratosthenes."""
    if limit < 2:
        return []
    flags = [True] * limit
    flags[0] = flags[1] = False
    p = 2
    while p * p < limit:
        if flags[p]:
            for multiple in range(p * p, limit, p):
                flags[multiple] = False
        p += 1
    return [i for i, ok in enumerate(flags) if ok]


def prime_factors(n):
    factors = []
    remaining = n
    divisor = 2
    while divisor * divisor <= remaining:
        while remaining % divisor == 0:
            factors.append(divisor)
            remaining //= divisor
        divisor += 1
    if remaining > 1:
        factors.append(remaining)
    return factors


def twin_primes(limit):
    primes = sieve(limit)
    prime_set = set(primes)
    return [(p, p + 2) for p in primes if p + 2 in prime_set]
