"""Classify 2^p - 1 for every prime p up to a bound and time each test."""
import argparse
import time

from omegalab.config import load_caps
from omegalab.number_theory import is_prime_trial, llm_composite_witness, llm_is_mersenne_prime


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=700)
    parser.add_argument("--method", choices=("naive", "fast"), default="fast")
    args = parser.parse_args()
    caps = load_caps()
    found = []
    start = time.perf_counter()
    for p in range(5, args.p_max + 1):
        if not is_prime_trial(p):
            continue
        t0 = time.perf_counter()
        verdict = llm_is_mersenne_prime(p, args.method, caps=caps)
        dt = time.perf_counter() - t0
        witness = [o for o in (1, -1) if llm_composite_witness(p, o, caps=caps)]
        if verdict.is_prime:
            found.append(p)
        mark = "PRIME" if verdict.is_prime else "composite"
        print(f"p={p:5d}  {mark:9s}  {dt * 1e3:8.2f} ms  witness_offsets={witness}")
    print(f"prime exponents: {found}")
    print(f"total {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
