#include "cevian/arith.hpp"

#include <map>
#include <stdexcept>

namespace cevian {

namespace {

bool probably_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Brent's variant of Pollard rho.  n must be odd, composite and > 1.
// Deterministic: the polynomial offset c is stepped instead of randomized.
Int pollard_brent(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, ys = 0, q = 1, d = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                const unsigned long steps = (m < r - k) ? m : r - k;
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // Cycle overshoot: retry step by step from the saved iterate.
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n)
            return d;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n <= 1)
        return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    if (is_perfect_square(n)) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        std::map<Int, unsigned> half;
        factor_into(r, half);
        for (const auto& [p, e] : half)
            out[p] += 2 * e;
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int squarefree_part(const Int& n, Int* square_root_factor) {
    if (n <= 0)
        throw std::invalid_argument("squarefree_part: argument must be positive");
    Int rest = n, k = 1, s = 1;
    // Strip small primes first; Pollard only sees the hard cofactor.
    static const unsigned long small_primes_limit = 100000;
    for (unsigned long p = 2; p * p <= rest && p < small_primes_limit; p = (p == 2 ? 3 : p + 2)) {
        if (rest % p != 0)
            continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2)
            k *= p;
        if (e % 2)
            s *= p;
    }
    if (rest > 1) {
        std::map<Int, unsigned> factors;
        factor_into(rest, factors);
        for (const auto& [p, e] : factors) {
            for (unsigned i = 0; i + 1 < e; i += 2)
                k *= p;
            if (e % 2)
                s *= p;
        }
    }
    if (square_root_factor)
        *square_root_factor = k;
    return s;
}

bool rational_sqrt(const Rat& q, Rat& root) {
    if (q < 0)
        return false;
    const Int num = q.get_num(), den = q.get_den();
    if (!is_perfect_square(num) || !is_perfect_square(den))
        return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

} // namespace cevian
