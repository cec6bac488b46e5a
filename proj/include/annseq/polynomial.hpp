#ifndef ANNSEQ_POLYNOMIAL_HPP
#define ANNSEQ_POLYNOMIAL_HPP

#include <map>
#include <string>

#include "annseq/monomial.hpp"
#include "annseq/scalar.hpp"

namespace annseq {

// Sparse polynomial over an exact field.  The same container represents
// X-polynomials and differential operators p(d); the two differ only in
// which operations are applied to them.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Scalar, DegLexLess>;

    explicit Polynomial(std::size_t n = 0) : n_(n) {}

    std::size_t vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponent& e, const Scalar& c) {
        if (e.size() != n_) throw std::invalid_argument("term dimension mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const Exponent& e, const Scalar& zero) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    Polynomial scaled(const Scalar& c) const {
        Polynomial r(n_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }

    Polynomial shifted(const Exponent& t) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(mono_mul(e, t), c);
        return r;
    }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    // componentwise max of exponents (the multidegree)
    Exponent multidegree() const {
        Exponent d(n_, 0);
        for (const auto& [e, c] : terms_) d = mono_lcm(d, e);
        return d;
    }

    Scalar constant_term(const Scalar& zero) const {
        return coeff(Exponent(n_, 0), zero);
    }

    bool operator==(const Polynomial& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& vars = {},
                    bool as_partial = false) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string m = mono_str(e, vars);
            if (as_partial && m != "1") {
                std::string p;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (!e[i]) continue;
                    if (!p.empty()) p += "*";
                    p += "d" + std::to_string(i + 1);
                    if (e[i] > 1) p += "^" + std::to_string(e[i]);
                }
                m = p;
            }
            out += c.str();
            if (m != "1") out += "*" + m;
        }
        return out;
    }

private:
    std::size_t n_;
    TermMap terms_;
};

// Bilinear pairing p(d)(f) with d^a(X^b) = 1 iff a = b: sums products of
// coefficients over the shared exponents.
inline Scalar apply_dual(const Polynomial& p, const Polynomial& f,
                         const Scalar& zero) {
    if (p.vars() != f.vars())
        throw std::invalid_argument("apply_dual dimension mismatch");
    Scalar acc = zero;
    const auto& a = p.terms();
    const auto& b = f.terms();
    // walk the smaller map
    if (a.size() <= b.size()) {
        for (const auto& [e, c] : a) {
            auto it = b.find(e);
            if (it != b.end()) acc += c * it->second;
        }
    } else {
        for (const auto& [e, c] : b) {
            auto it = a.find(e);
            if (it != a.end()) acc += c * it->second;
        }
    }
    return acc;
}

// d_k . p(d): shift every exponent down by e_k, dropping terms whose k-th
// coordinate is zero.
inline Polynomial derive(const Polynomial& p, std::size_t k) {
    if (k >= p.vars()) throw std::invalid_argument("derive: bad variable index");
    Polynomial r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) continue;
        Exponent d = e;
        --d[k];
        r.add_term(d, c);
    }
    return r;
}

// Formal antiderivative used by the integration method: truncate by
// dropping every term with a nonzero exponent in a coordinate above k,
// then raise coordinate k by one.
inline Polynomial integrate(const Polynomial& p, std::size_t k) {
    if (k >= p.vars()) throw std::invalid_argument("integrate: bad variable index");
    Polynomial r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        bool truncated = false;
        for (std::size_t i = k + 1; i < e.size(); ++i)
            if (e[i] != 0) { truncated = true; break; }
        if (truncated) continue;
        Exponent u = e;
        ++u[k];
        r.add_term(u, c);
    }
    return r;
}

// Coefficient reversal about an arbitrary reflection exponent:
// c*X^g -> c*X^(e-g).  An involution on polynomials supported in [0,e].
inline Polynomial reflect_about(const Polynomial& f, const Exponent& e) {
    Polynomial r(f.vars());
    for (const auto& [g, c] : f.terms()) {
        auto d = mono_div(e, g);
        if (!d) throw std::invalid_argument("reflect_about: exponent exceeds reflection point");
        r.add_term(*d, c);
    }
    return r;
}

// rec(f): reflection about the multidegree of f itself.
inline Polynomial reciprocal(const Polynomial& f) {
    return reflect_about(f, f.multidegree());
}

}  // namespace annseq

#endif
