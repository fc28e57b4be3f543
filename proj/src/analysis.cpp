#include "seqcorr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "seqcorr/gf2poly.hpp"
#include "seqcorr/numbers.hpp"
#include "seqcorr/patterns.hpp"

namespace seqcorr {

namespace {

std::int64_t to_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_coprime_pair(const BinarySequence& s, const BinarySequence& t) {
    if (s.period() <= 1 || t.period() <= 1)
        throw std::invalid_argument("coprime-pair check needs both periods > 1");
    if (std::gcd(s.period(), t.period()) != 1)
        throw std::invalid_argument("coprime-pair check needs coprime periods");
}

}  // namespace

std::int64_t verify_constancy(const BinarySequence& s, const BinarySequence& t, unsigned jobs) {
    require_coprime_pair(s, t);
    std::size_t n = common_period(s, t);
    if (n <= 10000) {
        CorrelationProfile pr = cross_profile(s, t, Method::arithmetic, jobs);
        for (std::size_t tau = 1; tau < n; ++tau)
            if (pr.values[tau] != pr.values[0])
                throw std::runtime_error(
                    "arithmetic crosscorrelation not constant: value " +
                    std::to_string(pr.values[tau]) + " at lag " + std::to_string(tau) +
                    " vs value " + std::to_string(pr.values[0]) + " at lag 0");
        return pr.values[0];
    }
    std::int64_t base = arithmetic_crosscorrelation(s, t, 0);
    std::mt19937_64 rng(0x7a115eed);
    std::uniform_int_distribution<std::size_t> dist(1, n - 1);
    for (int i = 0; i < 64; ++i) {
        std::size_t tau = dist(rng);
        std::int64_t v = arithmetic_crosscorrelation(s, t, to_i64(tau));
        if (v != base)
            throw std::runtime_error("arithmetic crosscorrelation not constant: value " +
                                     std::to_string(v) + " at lag " + std::to_string(tau) +
                                     " vs value " + std::to_string(base) + " at lag 0");
    }
    return base;
}

std::vector<BoundReport> check_m_auto_bound(unsigned n, unsigned jobs) {
    if (n < 3 || n > 16) throw std::invalid_argument("check_m_auto_bound: n must be in [3, 16]");
    BinarySequence s = m_sequence(first_primitive_poly(n));
    CorrelationProfile pr = auto_profile(s, Method::arithmetic, jobs);
    std::size_t period = s.period();
    std::vector<BoundReport> out;
    out.reserve(period - 1);
    for (std::size_t tau = 1; tau < period; ++tau) {
        std::size_t e = std::min<std::size_t>({n - 1, tau + 1, period + 1 - tau});
        auto bound = to_i64((std::size_t{1} << e) - 1);
        BoundReport r;
        r.id = "theorem4 n=" + std::to_string(n) + " tau=" + std::to_string(tau);
        r.observed = pr.values[tau];
        r.bound = static_cast<double>(bound);
        r.ratio = bound == 0 ? 0.0 : std::abs(static_cast<double>(r.observed)) / r.bound;
        r.pass = std::abs(r.observed) <= bound;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundReport> check_l_sequence_identities(std::uint64_t p, std::uint64_t a) {
    BinarySequence s = l_sequence(p, a);
    std::size_t n = s.period();  // p - 1
    std::size_t half = n / 2;
    CorrelationProfile cls = auto_profile(s, Method::classical);
    CorrelationProfile ari = auto_profile(s, Method::arithmetic);

    std::vector<BoundReport> out;
    {
        BoundReport r;
        r.id = "lseq peak p=" + std::to_string(p);
        r.observed = cls.values[half];
        r.bound = -static_cast<double>(p - 1);
        r.pass = r.observed == -to_i64(p - 1);
        out.push_back(std::move(r));
    }
    {
        std::int64_t side = 0;
        for (std::size_t tau = 1; tau < n; ++tau)
            if (tau != half) side = std::max(side, std::abs(cls.values[tau]));
        std::int64_t expected = p >= 7 ? to_i64(el3(p)) : 0;
        BoundReport r;
        r.id = "lseq side p=" + std::to_string(p);
        r.observed = side;
        r.bound = static_cast<double>(expected);
        r.pass = side == expected;
        out.push_back(std::move(r));
    }
    {
        std::int64_t worst = 0;
        for (std::size_t tau = 1; tau < n; ++tau)
            worst = std::max(worst, std::abs(ari.values[tau]));
        BoundReport r;
        r.id = "lseq arith p=" + std::to_string(p);
        r.observed = worst;
        r.bound = 0.0;
        r.pass = worst == 0;
        out.push_back(std::move(r));
    }
    return out;
}

BoundReport check_cross_bound_ratio(CrossFamily family, std::uint64_t a, std::uint64_t b) {
    BoundReport r;
    if (family == CrossFamily::legendre) {
        if (a >= b) throw std::invalid_argument("legendre ratio needs p < q");
        std::int64_t v = arithmetic_crosscorrelation(legendre_sequence(a), legendre_sequence(b), 0);
        double lp = std::log(static_cast<double>(a));
        r.id = "theorem2 p=" + std::to_string(a) + " q=" + std::to_string(b);
        r.observed = v;
        r.bound = std::sqrt(static_cast<double>(a)) * static_cast<double>(b) * lp * lp;
    } else {
        if (a < 2 || a >= b) throw std::invalid_argument("m-sequence ratio needs 2 <= n1 < n2");
        if (std::gcd(a, b) != 1)
            throw std::invalid_argument("m-sequence ratio needs coprime degrees");
        BinarySequence s = m_sequence(first_primitive_poly(static_cast<unsigned>(a)));
        BinarySequence t = m_sequence(first_primitive_poly(static_cast<unsigned>(b)));
        std::int64_t v = arithmetic_crosscorrelation(s, t, 0);
        r.id = "theorem3 n1=" + std::to_string(a) + " n2=" + std::to_string(b);
        r.observed = v;
        r.bound = static_cast<double>(a) * std::ldexp(1.0, static_cast<int>(b));
    }
    r.ratio = std::abs(static_cast<double>(r.observed)) / r.bound;
    return r;
}

std::vector<BoundReport> check_lemma2(unsigned n1, unsigned n2) {
    if (n1 < 2 || n1 >= n2 || n2 > 16)
        throw std::invalid_argument("check_lemma2: need 2 <= n1 < n2 <= 16");
    if (std::gcd(n1, n2) != 1) throw std::invalid_argument("check_lemma2: degrees must be coprime");
    BinarySequence s = m_sequence(first_primitive_poly(n1));
    BinarySequence t = m_sequence(first_primitive_poly(n2));
    std::int64_t n = to_i64(common_period(s, t));

    std::vector<BoundReport> out;
    for (std::size_t k = 0; k < n1; ++k) {
        // Compare count against N/2^(2k+2) with both sides scaled by 2^(2k+2)
        // to stay in integers.
        std::int64_t scale = to_i64(std::size_t{1} << (2 * k + 2));
        std::int64_t dev = 0;
        for (const PatternCount& pc : joint_pattern_counts(s, t, k))
            dev = std::max(dev, std::abs(to_i64(pc.count) * scale - n));
        std::int64_t allowed =
            (to_i64(std::size_t{1} << (n1 - k - 1)) + to_i64(std::size_t{1} << (n2 - k - 1)) + 1) *
            scale;
        BoundReport r;
        r.id = "lemma2 n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
               " k=" + std::to_string(k);
        r.observed = dev;
        r.bound = static_cast<double>(allowed);
        r.ratio = static_cast<double>(dev) / static_cast<double>(allowed);
        r.pass = dev <= allowed;
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Max |count - closed form| over one window census of an m-sequence.
std::int64_t lemma3_deviation(const BinarySequence& s, std::int64_t tau, std::size_t k,
                              std::size_t nonzero_expected) {
    std::int64_t dev = 0;
    for (const PatternCount& pc : auto_pattern_counts(s, tau, k)) {
        bool zero_window =
            std::all_of(pc.pattern.begin(), pc.pattern.end(), [](std::uint8_t b) { return !b; });
        std::int64_t expected = to_i64(nonzero_expected) - (zero_window ? 1 : 0);
        dev = std::max(dev, std::abs(to_i64(pc.count) - expected));
    }
    return dev;
}

}  // namespace

std::vector<BoundReport> check_lemma3(unsigned n) {
    if (n < 3 || n > 12) throw std::invalid_argument("check_lemma3: n must be in [3, 12]");
    std::vector<BoundReport> out;
    for (const Gf2Poly& f : all_primitive_polys(n)) {
        BinarySequence s = m_sequence(f);
        for (std::size_t tau = 1; tau < n; ++tau) {
            auto itau = to_i64(tau);
            auto push = [&](std::size_t k, const char* shape, std::size_t nonzero_expected) {
                BoundReport r;
                r.id = "lemma3 f=" + f.to_coeff_string() + " tau=" + std::to_string(tau) +
                       " k=" + std::to_string(k) + " window=" + shape;
                r.observed = lemma3_deviation(s, itau, k, nonzero_expected);
                r.bound = 0.0;
                r.pass = r.observed == 0;
                out.push_back(std::move(r));
            };
            for (std::size_t k = 0; k < std::min(tau, n - tau); ++k)
                push(k, "split", std::size_t{1} << (n - 2 * k - 2));
            for (std::size_t k = tau; k + tau + 1 <= n; ++k)
                push(k, "contiguous", std::size_t{1} << (n - k - tau - 1));
        }
    }
    return out;
}

BinarySequence random_minimal_period_sequence(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("period must be positive");
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        std::vector<std::uint8_t> bits(n);
        for (auto& b : bits) b = static_cast<std::uint8_t>(coin(rng));
        BinarySequence s(std::move(bits));
        if (s.minimal_period() == n) return s;
    }
}

BoundReport check_symmetry(std::size_t count, std::size_t max_period, std::uint64_t rng_seed) {
    if (max_period < 2) throw std::invalid_argument("check_symmetry: max_period must be >= 2");
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::size_t> pick(2, max_period);
    std::int64_t violations = 0;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = pick(rng);
        BinarySequence s = random_minimal_period_sequence(n, rng);
        CorrelationProfile pr = auto_profile(s, Method::arithmetic);
        for (std::size_t tau = 1; tau < n; ++tau)
            if (pr.values[tau] != -pr.values[n - tau]) ++violations;
    }
    BoundReport r;
    r.id = "symmetry count=" + std::to_string(count) +
           " max-period=" + std::to_string(max_period);
    r.observed = violations;
    r.bound = 0.0;
    r.pass = violations == 0;
    return r;
}

namespace {

TableRow check_table_pair(const BinarySequence& s, std::string s_label, const BinarySequence& t,
                          std::string t_label, std::int64_t expected, std::mt19937_64& rng) {
    std::size_t n = common_period(s, t);
    TableRow row;
    row.s_label = std::move(s_label);
    row.t_label = std::move(t_label);
    row.expected = expected;
    row.computed = arithmetic_crosscorrelation(s, t, 0);
    row.constant_at_spot_lags = true;
    std::uniform_int_distribution<std::size_t> dist(1, n - 1);
    for (int i = 0; i < 10; ++i) {
        std::size_t tau = dist(rng);
        if (arithmetic_crosscorrelation(s, t, to_i64(tau)) != row.computed) {
            row.constant_at_spot_lags = false;
            break;
        }
    }
    row.pass = row.computed == row.expected && row.constant_at_spot_lags;
    return row;
}

}  // namespace

std::vector<TableRow> reproduce_table1() {
    struct Row {
        std::uint64_t p, q;
        std::int64_t expected;
    };
    static constexpr Row kRows[] = {{7, 11, -1},  {7, 13, 5},   {7, 17, -13}, {7, 23, 1},
                                    {11, 13, -3}, {11, 19, -5}, {13, 17, -7}, {17, 29, 9}};
    std::mt19937_64 rng(0x1ab1e001);
    std::vector<TableRow> out;
    for (const Row& row : kRows)
        out.push_back(check_table_pair(legendre_sequence(row.p), "legendre:" + std::to_string(row.p),
                                       legendre_sequence(row.q), "legendre:" + std::to_string(row.q),
                                       row.expected, rng));
    return out;
}

std::vector<TableRow> reproduce_table2() {
    struct Row {
        const char* fs;
        const char* ft;
        std::int64_t expected;
    };
    static constexpr Row kRows[] = {{"x^3+x^2+1", "x^4+x^3+1", -1},
                                    {"x^3+x^2+1", "x^5+x^3+1", 1},
                                    {"x^3+x^2+1", "x^7+x^6+1", -3},
                                    {"x^3+x^2+1", "x^8+x^6+x^5+x^4+1", 7},
                                    {"x^5+x^3+1", "x^8+x^6+x^5+x^4+1", -1},
                                    {"x^6+x^5+1", "x^7+x^6+1", -1},
                                    {"x^7+x^6+1", "x^8+x^6+x^5+x^4+1", -3}};
    std::mt19937_64 rng(0x1ab1e002);
    std::vector<TableRow> out;
    for (const Row& row : kRows) {
        Gf2Poly fs = Gf2Poly::parse_expr(row.fs);
        Gf2Poly ft = Gf2Poly::parse_expr(row.ft);
        out.push_back(check_table_pair(m_sequence(fs), fs.to_expr(), m_sequence(ft), ft.to_expr(),
                                       row.expected, rng));
    }
    return out;
}

ValueSets noncoprime_value_sets() {
    BinarySequence s = m_sequence(Gf2Poly::parse_expr("x^4+x+1"));
    BinarySequence t = m_sequence(Gf2Poly::parse_expr("x^4+x^3+1"));
    ValueSets sets;
    CorrelationProfile cls = cross_profile(s, t, Method::classical);
    CorrelationProfile ari = cross_profile(s, t, Method::arithmetic);
    sets.classical.insert(cls.values.begin(), cls.values.end());
    sets.arithmetic.insert(ari.values.begin(), ari.values.end());
    return sets;
}

std::vector<PairResult> theorem1_suite(std::size_t max_lcm, unsigned jobs) {
    struct Entry {
        std::string label;
        BinarySequence seq;
    };
    std::vector<Entry> catalog;
    for (std::uint64_t p : {3, 5, 7, 11, 13})
        catalog.push_back({format_spec(LegendreSpec{p}), legendre_sequence(p)});
    for (unsigned n : {2, 3, 4, 5}) {
        Gf2Poly f = first_primitive_poly(n);
        catalog.push_back({format_spec(MSequenceSpec{f, {}}), m_sequence(f)});
    }
    for (std::uint64_t p : {5, 11, 13})
        catalog.push_back({format_spec(LSequenceSpec{p, 1}), l_sequence(p)});

    std::vector<PairResult> out;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (std::size_t j = i + 1; j < catalog.size(); ++j) {
            const BinarySequence& s = catalog[i].seq;
            const BinarySequence& t = catalog[j].seq;
            if (std::gcd(s.period(), t.period()) != 1) continue;
            std::size_t n = s.period() * t.period();
            if (n > max_lcm) continue;
            PairResult pr;
            pr.s_label = catalog[i].label;
            pr.t_label = catalog[j].label;
            pr.common = n;
            pr.constant = verify_constancy(s, t, jobs);
            std::int64_t via_omega = to_i64(n) - 2 * to_i64(omega(s, t).weight());
            pr.omega_match = via_omega == pr.constant;
            if (!pr.omega_match)
                throw std::runtime_error("omega oracle mismatch for " + pr.s_label + " vs " +
                                         pr.t_label + ": " + std::to_string(via_omega) + " != " +
                                         std::to_string(pr.constant));
            out.push_back(std::move(pr));
        }
    }
    return out;
}

}  // namespace seqcorr
