#include "seqcorr/gf2poly.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

#include "seqcorr/numbers.hpp"

namespace seqcorr {

namespace {

constexpr std::uint64_t kXMask = 2;  // the polynomial X

// X^(2^k) mod f by k successive squarings of X.
std::uint64_t frobenius_of_x(const Gf2Poly& f, unsigned k) {
    Gf2Poly t = Gf2Poly::from_mask(kXMask);
    for (unsigned i = 0; i < k; ++i) t = gf2_mulmod(t, t, f);
    return t.mask();
}

Gf2Poly gf2_powmod_x(std::uint64_t exp, const Gf2Poly& f) {
    Gf2Poly result = Gf2Poly::from_mask(1);
    Gf2Poly base = Gf2Poly::from_mask(kXMask);
    while (exp > 0) {
        if (exp & 1) result = gf2_mulmod(result, base, f);
        base = gf2_mulmod(base, base, f);
        exp >>= 1;
    }
    return result;
}

}  // namespace

int Gf2Poly::degree() const {
    return mask_ == 0 ? -1 : 63 - std::countl_zero(mask_);
}

Gf2Poly Gf2Poly::parse_expr(std::string_view expr) {
    std::uint64_t mask = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i == expr.size()) break;
        if (!expect_term) {
            if (expr[i] != '+') throw std::invalid_argument("polynomial: expected '+'");
            ++i;
            skip_ws();
        }
        expect_term = false;
        if (i == expr.size()) throw std::invalid_argument("polynomial: dangling '+'");
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(expr[i])));
        unsigned deg = 0;
        if (c == 'x') {
            ++i;
            skip_ws();
            deg = 1;
            if (i < expr.size() && expr[i] == '^') {
                ++i;
                skip_ws();
                if (i == expr.size() || !std::isdigit(static_cast<unsigned char>(expr[i])))
                    throw std::invalid_argument("polynomial: exponent expected after '^'");
                deg = 0;
                while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i])))
                    deg = deg * 10 + static_cast<unsigned>(expr[i++] - '0');
            }
        } else if (c == '1') {
            ++i;
            deg = 0;
        } else {
            throw std::invalid_argument("polynomial: unexpected character");
        }
        if (deg > 63) throw std::invalid_argument("polynomial: degree above 63 unsupported");
        if (mask & (1ull << deg)) throw std::invalid_argument("polynomial: repeated term");
        mask |= 1ull << deg;
    }
    if (mask == 0) throw std::invalid_argument("polynomial: empty expression");
    return Gf2Poly(mask);
}

Gf2Poly Gf2Poly::parse_coeff_string(std::string_view s) {
    if (s.size() < 2 || s.size() > 64)
        throw std::invalid_argument("polynomial: coefficient string needs 2..64 bits");
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            mask |= 1ull << j;
        else if (s[j] != '0')
            throw std::invalid_argument("polynomial: coefficient string must be 0/1");
    }
    if (!(mask >> (s.size() - 1)))
        throw std::invalid_argument("polynomial: leading coefficient must be 1");
    return Gf2Poly(mask);
}

std::string Gf2Poly::to_expr() const {
    if (mask_ == 0) return "0";
    std::string out;
    for (int j = degree(); j >= 0; --j) {
        if (!coeff(static_cast<unsigned>(j))) continue;
        if (!out.empty()) out += "+";
        if (j == 0)
            out += "1";
        else if (j == 1)
            out += "x";
        else
            out += "x^" + std::to_string(j);
    }
    return out;
}

std::string Gf2Poly::to_coeff_string() const {
    int d = degree();
    if (d < 0) return "0";
    std::string out(static_cast<std::size_t>(d) + 1, '0');
    for (int j = 0; j <= d; ++j)
        if (coeff(static_cast<unsigned>(j))) out[static_cast<std::size_t>(j)] = '1';
    return out;
}

Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& f) {
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("gf2_mulmod: modulus must have degree >= 1");
    std::uint64_t top = 1ull << n;
    std::uint64_t acc = 0, x = a.mask(), y = b.mask();
    while (y) {
        if (y & 1) acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top) x ^= f.mask();
    }
    return Gf2Poly::from_mask(acc);
}

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
    std::uint64_t x = a.mask(), y = b.mask();
    while (y) {
        // x mod y by long division
        int dy = 63 - std::countl_zero(y);
        while (true) {
            if (x == 0) break;
            int dx = 63 - std::countl_zero(x);
            if (dx < dy) break;
            x ^= y << (dx - dy);
        }
        std::swap(x, y);
    }
    return Gf2Poly::from_mask(x);
}

bool is_irreducible(const Gf2Poly& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!f.coeff(0)) return false;  // divisible by X
    // X^(2^n) == X mod f, and gcd(X^(2^(n/r)) - X, f) = 1 for prime r | n.
    if (frobenius_of_x(f, static_cast<unsigned>(n)) != kXMask) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
        std::uint64_t u = frobenius_of_x(f, static_cast<unsigned>(n / static_cast<int>(r)));
        if (gf2_gcd(Gf2Poly::from_mask(u ^ kXMask), f).degree() != 0) return false;
    }
    return true;
}

bool is_primitive(const Gf2Poly& f) {
    int n = f.degree();
    if (n <= 0) throw std::invalid_argument("is_primitive: degree must be >= 1");
    if (n == 1) return f.coeff(0);  // X+1 generates the trivial group; X does not
    if (!is_irreducible(f)) return false;
    std::uint64_t group = (1ull << n) - 1;
    for (std::uint64_t r : prime_factors(group)) {
        if (gf2_powmod_x(group / r, f).mask() == 1) return false;
    }
    return true;
}

Gf2Poly first_primitive_poly(unsigned degree) {
    if (degree == 0 || degree > 63)
        throw std::invalid_argument("first_primitive_poly: degree must be in [1, 63]");
    std::uint64_t top = 1ull << degree;
    for (std::uint64_t low = 1; low < top; low += 2) {  // constant term must be 1
        Gf2Poly f = Gf2Poly::from_mask(top | low);
        if (is_primitive(f)) return f;
    }
    throw std::logic_error("first_primitive_poly: none found");  // cannot happen
}

std::vector<Gf2Poly> all_primitive_polys(unsigned degree) {
    if (degree == 0 || degree > 24)
        throw std::invalid_argument("all_primitive_polys: degree must be in [1, 24]");
    std::vector<Gf2Poly> out;
    std::uint64_t top = 1ull << degree;
    for (std::uint64_t low = 1; low < top; low += 2) {
        Gf2Poly f = Gf2Poly::from_mask(top | low);
        if (is_primitive(f)) out.push_back(f);
    }
    return out;
}

}  // namespace seqcorr
