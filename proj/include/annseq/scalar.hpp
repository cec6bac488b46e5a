#ifndef ANNSEQ_SCALAR_HPP
#define ANNSEQ_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace annseq {

// Exact field element: either a rational (GMP mpq, canonical form) or a
// residue mod a prime p.  The prime travels with the value; mixing
// elements of different fields is a logic error.
class Scalar {
public:
    Scalar() = default;

    static Scalar rational(long num, long den = 1) {
        Scalar s;
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }

    static Scalar rational(const mpq_class& q) {
        Scalar s;
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }

    static Scalar mod(std::uint64_t value, std::uint64_t p) {
        if (p < 2) throw std::invalid_argument("prime must be >= 2");
        Scalar s;
        s.p_ = p;
        s.v_ = value % p;
        return s;
    }

    bool is_rational() const { return p_ == 0; }
    std::uint64_t prime() const { return p_; }
    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return v_; }

    bool is_zero() const { return p_ ? v_ == 0 : q_ == 0; }
    bool is_one() const { return p_ ? v_ == 1 : q_ == 1; }

    Scalar operator+(const Scalar& o) const {
        check(o);
        return p_ ? raw(addmod(v_, o.v_, p_), p_) : rational(mpq_class(q_ + o.q_));
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        return p_ ? raw(addmod(v_, p_ - o.v_, p_), p_) : rational(mpq_class(q_ - o.q_));
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        return p_ ? raw(mulmod(v_, o.v_, p_), p_) : rational(mpq_class(q_ * o.q_));
    }
    Scalar operator-() const {
        return p_ ? raw(v_ ? p_ - v_ : 0, p_) : rational(mpq_class(-q_));
    }
    Scalar inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (!p_) return rational(mpq_class(1 / q_));
        return raw(powmod(v_, p_ - 2, p_), p_);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    // *this -= a*b without temporaries; the elimination hot path
    void submul(const Scalar& a, const Scalar& b) {
        check(a);
        check(b);
        if (p_) {
            v_ = addmod(v_, p_ - mulmod(a.v_, b.v_, p_), p_);
        } else {
            q_ -= a.q_ * b.q_;
        }
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return p_ == o.p_ && (p_ ? v_ == o.v_ : q_ == o.q_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // exact string form; rationals as "n" or "n/d", residues as decimal
    std::string str() const {
        if (p_) return std::to_string(v_);
        return q_.get_str();
    }

    Scalar zero_like() const { return p_ ? raw(0, p_) : rational(0); }
    Scalar one_like() const { return p_ ? raw(1, p_) : rational(1); }

private:
    static Scalar raw(std::uint64_t v, std::uint64_t p) {
        Scalar s;
        s.v_ = v;
        s.p_ = p;
        return s;
    }
    void check(const Scalar& o) const {
        if (p_ != o.p_) throw std::logic_error("mixed-field scalar arithmetic");
    }
    static std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        std::uint64_t r = a + b;      // p < 2^63 assumed via Field validation
        return r >= p ? r - p : r;
    }
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    static std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1) r = mulmod(r, a, p);
            a = mulmod(a, a, p);
            e >>= 1;
        }
        return r;
    }

    mpq_class q_{0};
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;  // 0 = rational
};

// Field descriptor: picks between the rationals and F_p, builds elements.
struct Field {
    std::uint64_t prime = 0;  // 0 = rational

    static Field rationals() { return Field{0}; }
    static Field fp(std::uint64_t p) {
        if (p < 2 || p >= (std::uint64_t{1} << 62))
            throw std::invalid_argument("unsupported prime");
        return Field{p};
    }

    bool is_rational() const { return prime == 0; }

    Scalar zero() const { return from_int(0); }
    Scalar one() const { return from_int(1); }

    Scalar from_int(long v) const {
        if (!prime) return Scalar::rational(v);
        long m = static_cast<long>(v % static_cast<long>(prime));
        if (m < 0) m += static_cast<long>(prime);
        return Scalar::mod(static_cast<std::uint64_t>(m), prime);
    }

    // "3", "-3" or "3/4" (rationals); decimal residue for F_p
    Scalar parse(const std::string& text) const {
        if (text.empty()) throw std::invalid_argument("empty scalar literal");
        if (!prime) {
            mpq_class q;
            if (q.set_str(text, 10) != 0)
                throw std::invalid_argument("bad rational literal: " + text);
            q.canonicalize();
            return Scalar::rational(q);
        }
        mpz_class z;
        if (z.set_str(text, 10) != 0)
            throw std::invalid_argument("bad integer literal: " + text);
        mpz_class m = z % static_cast<unsigned long>(prime);
        if (m < 0) m += static_cast<unsigned long>(prime);
        return Scalar::mod(m.get_ui(), prime);
    }

    std::string name() const {
        return prime ? "fp:" + std::to_string(prime) : "rational";
    }

    bool operator==(const Field& o) const { return prime == o.prime; }
};

inline constexpr std::uint64_t kDefaultPrime = 65521;  // largest prime < 2^16

}  // namespace annseq

#endif
