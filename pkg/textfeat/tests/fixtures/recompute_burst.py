"""
Exact rational recompute of the burst score, kept apart from textfeat.

    python textfeat/tests/fixtures/recompute_burst.py
    209/15 = 13.9333333333
"""
from fractions import Fraction


def burst_score(freqs, j, lambda_i, lam, u, first_seen=0):
    """
    rho is 0 here, so the decay factor is 1 and the result stays rational
    """
    lambda_i = Fraction(lambda_i)
    lam = Fraction(lam)
    x = [Fraction(f) if i >= first_seen else Fraction(0) for i, f in enumerate(freqs)]
    first = abs(x[j] - lambda_i) / lam
    total = Fraction(0)
    for s in range(1, u + 1):
        previous = x[j - s] if j - s >= 0 else Fraction(0)
        total += (x[j] - previous) / lambda_i / s
    return max(first * total, Fraction(0))


if __name__ == "__main__":
    value = burst_score([0, 0, 2, 8], 3, Fraction(5, 2), 2, 3)
    print(f"{value} = {float(value):.10f}")
