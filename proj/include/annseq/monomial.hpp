#ifndef ANNSEQ_MONOMIAL_HPP
#define ANNSEQ_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace annseq {

// Exponent vector in N^n; doubles as a monomial X^a and a differential
// operator monomial d^a.
using Exponent = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponent& a) {
    return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

inline void check_same_dim(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("exponent dimension mismatch");
}

// Term order used for every sorted label list: total degree first, ties
// by lexicographic comparison from the last variable down (so in two
// variables 1 < x < y < x^2 < xy < y^2).
inline bool deglex_less(const Exponent& a, const Exponent& b) {
    check_same_dim(a, b);
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct DegLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return deglex_less(a, b);
    }
};

inline Exponent mono_lcm(const Exponent& a, const Exponent& b) {
    check_same_dim(a, b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exponent mono_gcd(const Exponent& a, const Exponent& b) {
    check_same_dim(a, b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline bool divides(const Exponent& b, const Exponent& a) {
    check_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

// a / b, or nullopt when b does not divide a
inline std::optional<Exponent> mono_div(const Exponent& a, const Exponent& b) {
    if (!divides(b, a)) return std::nullopt;
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponent mono_mul(const Exponent& a, const Exponent& b) {
    check_same_dim(a, b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponent unit_exponent(std::size_t n, std::size_t k) {
    Exponent e(n, 0);
    e[k] = 1;
    return e;
}

// display form, e.g. "x^2*y" with default variable names
inline std::string mono_str(const Exponent& a,
                            const std::vector<std::string>& vars = {}) {
    static const char* defaults[] = {"x", "y", "z", "u", "v", "w"};
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += "*";
        std::string v = i < vars.size()
                            ? vars[i]
                            : (i < 6 ? defaults[i] : "x" + std::to_string(i + 1));
        out += v;
        if (a[i] > 1) out += "^" + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace annseq

#endif
