"""Tabulate the prime-emergence ratio against several points and show which primes it contains."""
import argparse

from omegalab.number_theory import EMERGENCE_POINTS, emergence_ratio, kth_prime, primes_upto
from omegalab.omega import in_omega_space


def prime_factors(n, primes):
    out = []
    for p in primes:
        if p * p > n:
            break
        while n % p == 0:
            out.append(p)
            n //= p
    if n > 1:
        out.append(n)
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-max", type=int, default=10)
    args = parser.parse_args()
    small = primes_upto(10_000).primes
    for k in range(2, args.k_max + 1):
        p, p_next = kth_prime(k), kth_prime(k + 1)
        members = [pt for pt in EMERGENCE_POINTS if in_omega_space(pt, 2 * p)]
        ratios = {emergence_ratio(k, pt) for pt in members}
        (ratio,) = ratios  # point independence: exactly one value
        distinct = sorted(set(prime_factors(ratio, small)))
        print(f"k={k:2d} p={p:3d} next={p_next:3d} points={len(members)} ratio={ratio} primes={distinct}")


if __name__ == "__main__":
    main()
