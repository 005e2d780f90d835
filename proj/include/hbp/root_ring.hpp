#ifndef HBP_ROOT_RING_HPP
#define HBP_ROOT_RING_HPP

#include <cstdint>
#include <vector>

#include "hbp/rational.hpp"

namespace hbp {

// Element of Q[x]/(x^M - 1), x standing for a fixed primitive M-th root of
// unity.  Multiplication is cyclic convolution; equality is coefficientwise.
// This is a product of cyclotomic fields, which is all the exactness the
// reduction algorithms need.
class RootElem {
public:
    RootElem() : m_(1), c_(1) {}
    explicit RootElem(std::uint32_t modulus) : m_(modulus), c_(modulus) {}

    static RootElem zero(std::uint32_t m) { return RootElem(m); }
    static RootElem one(std::uint32_t m) { return monomial(m, 0); }
    // q * zeta_m^k
    static RootElem monomial(std::uint32_t m, std::uint32_t k, Rational q = Rational(1)) {
        RootElem e(m);
        e.c_[k % m] = q;
        return e;
    }

    std::uint32_t modulus() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational& at(std::uint32_t k) { return c_[k % m_]; }
    const Rational& at(std::uint32_t k) const { return c_[k % m_]; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (!q.is_zero()) return false;
        return true;
    }

    // True when the element is q * zeta^k for a single k; reports (k, q).
    bool as_monomial(std::uint32_t& k, Rational& q) const {
        bool found = false;
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (c_[i].is_zero()) continue;
            if (found) return false;
            k = i;
            q = c_[i];
            found = true;
        }
        if (!found) { k = 0; q = Rational(0); }
        return true;
    }

    friend RootElem operator+(const RootElem& a, const RootElem& b) {
        RootElem r(a.check_same(b));
        for (std::uint32_t i = 0; i < r.m_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend RootElem operator-(const RootElem& a, const RootElem& b) {
        RootElem r(a.check_same(b));
        for (std::uint32_t i = 0; i < r.m_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend RootElem operator*(const RootElem& a, const RootElem& b) {
        RootElem r(a.check_same(b));
        for (std::uint32_t i = 0; i < a.m_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::uint32_t j = 0; j < b.m_; ++j) {
                if (b.c_[j].is_zero()) continue;
                std::uint32_t k = (i + j) % r.m_;
                r.c_[k] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    RootElem operator-() const {
        RootElem r(m_);
        for (std::uint32_t i = 0; i < m_; ++i) r.c_[i] = -c_[i];
        return r;
    }
    RootElem& operator+=(const RootElem& b) { return *this = *this + b; }
    RootElem& operator*=(const RootElem& b) { return *this = *this * b; }

    friend bool operator==(const RootElem& a, const RootElem& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }
    friend bool operator!=(const RootElem& a, const RootElem& b) { return !(a == b); }

    // Re-express in Q[x]/(x^{m2} - 1) for m | m2 via zeta_m = zeta_{m2}^{m2/m}.
    RootElem rescaled(std::uint32_t m2) const {
        if (m2 == m_) return *this;
        if (m2 % m_ != 0) throw std::domain_error("root ring rescale: modulus not a multiple");
        RootElem r(m2);
        std::uint32_t f = m2 / m_;
        for (std::uint32_t i = 0; i < m_; ++i) r.c_[i * f] = c_[i];
        return r;
    }

    // Deterministic total order on coefficient vectors (same modulus).
    friend bool lex_less(const RootElem& a, const RootElem& b) {
        for (std::uint32_t i = 0; i < a.m_; ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

private:
    std::uint32_t m_;
    std::vector<Rational> c_;

    std::uint32_t check_same(const RootElem& b) const {
        if (m_ != b.m_) throw std::domain_error("root ring modulus mismatch");
        return m_;
    }
};

}  // namespace hbp

#endif
