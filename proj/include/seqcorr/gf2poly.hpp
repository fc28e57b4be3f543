#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqcorr {

/// Polynomial over GF(2) with degree <= 63, packed into a word: bit j is the
/// coefficient of X^j. Over GF(2) every nonzero polynomial is monic.
class Gf2Poly {
public:
    Gf2Poly() = default;  // the zero polynomial

    static Gf2Poly from_mask(std::uint64_t coeff_mask) { return Gf2Poly(coeff_mask); }

    /// Parses "x^3+x^2+1" (case-insensitive, whitespace ignored).
    static Gf2Poly parse_expr(std::string_view expr);

    /// Parses the coefficient string c0 c1 ... c_{n-1} 1, constant term
    /// first, leading 1 last ("1011" is x^3+x^2+1).
    static Gf2Poly parse_coeff_string(std::string_view s);

    std::uint64_t mask() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }

    /// Degree of the highest term; -1 for the zero polynomial.
    int degree() const;

    bool coeff(unsigned j) const { return j < 64 && ((mask_ >> j) & 1u); }

    std::string to_expr() const;          // "x^3+x^2+1"
    std::string to_coeff_string() const;  // "1011"

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

private:
    explicit Gf2Poly(std::uint64_t mask) : mask_(mask) {}
    std::uint64_t mask_ = 0;
};

/// a*b mod f over GF(2); deg a, deg b < deg f <= 63.
Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& f);

/// Euclidean gcd of two GF(2) polynomials.
Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b);

bool is_irreducible(const Gf2Poly& f);

/// True iff f is irreducible and the residue class of X mod f has
/// multiplicative order 2^deg(f) - 1. Throws on degree 0.
bool is_primitive(const Gf2Poly& f);

/// Lowest-mask primitive polynomial of the given degree (deterministic).
Gf2Poly first_primitive_poly(unsigned degree);

/// Every primitive polynomial of the given degree, ascending by mask.
/// Exhaustive scan, so the degree is capped at 24.
std::vector<Gf2Poly> all_primitive_polys(unsigned degree);

}  // namespace seqcorr
