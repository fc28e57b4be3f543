#include "seqcorr/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcorr {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

// One Miller-Rabin round for witness a; n odd, n-1 = d * 2^r.
bool witness_composite(std::uint64_t a, std::uint64_t d, int r, std::uint64_t n) {
    std::uint64_t x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    // Brent's cycle variant; restarts with a different increment on failure.
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // This witness set decides primality for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (witness_composite(a, d, r, n)) return false;
    }
    return true;
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    std::int64_t mm = static_cast<std::int64_t>(m);
    std::int64_t r0 = mm, r1 = ((a % mm) + mm) % mm;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return static_cast<std::uint64_t>(((s0 % mm) + mm) % mm);
}

int legendre_symbol(std::int64_t n, std::uint64_t p) {
    if (p <= 2 || !is_prime(p))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    std::uint64_t r = floor_mod(n, p);
    if (r == 0) return 0;
    return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t el3(std::uint64_t p) {
    if (p < 7 || !is_prime(p))
        throw std::invalid_argument("el3: p must be a prime >= 7");
    // p is prime so p/3 is never an integer; the greatest integer below it
    // is (p-1)/3 rounded down.
    std::uint64_t x = (p - 1) / 3;
    return x % 2 == 0 ? x : x - 1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("prime_factors: n must be >= 2");
    std::vector<std::uint64_t> out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    a %= m;
    if (std::gcd(a, m) != 1)
        throw std::invalid_argument("multiplicative_order: arguments are not coprime");
    // Group exponent: for prime m this is m-1; otherwise fall back to a scan.
    if (is_prime(m)) {
        std::uint64_t order = m - 1;
        for (std::uint64_t q : prime_factors(m - 1)) {
            while (order % q == 0 && mod_pow(a, order / q, m) == 1) order /= q;
        }
        return order;
    }
    std::uint64_t x = a, order = 1;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++order;
    }
    return order;
}

bool is_primitive_root(std::uint64_t a, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("is_primitive_root: p must be prime");
    if (a % p == 0) return false;
    return multiplicative_order(a, p) == p - 1;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm: arguments must be >= 1");
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t q = a / g;
    if (b > UINT64_MAX / q) throw std::overflow_error("lcm: result does not fit 64 bits");
    return q * b;
}

}  // namespace seqcorr
