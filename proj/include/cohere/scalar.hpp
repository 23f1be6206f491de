#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace cohere {

/// Exact rational scalar (GMP backed).
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument.
inline Rational parse_rational(const std::string& s) {
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q) || q[0] == '-' || q[0] == '+')
        throw std::invalid_argument("bad rational '" + s + "'");
    if (p[0] == '+') p.erase(0, 1);
    boost::multiprecision::mpz_int den(q);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(boost::multiprecision::mpz_int(p), den);
}

/// Tags for the quadratic fields Q(theta) with theta^2 = P + Q*theta.
struct EisensteinTag {  // omega, omega^2 = -1 - omega
    static constexpr int P = -1, Q = -1;
    static constexpr const char* symbol = "w";
    static constexpr const char* field = "Q(omega)";
};
struct GaussianTag {  // i, i^2 = -1
    static constexpr int P = -1, Q = 0;
    static constexpr const char* symbol = "i";
    static constexpr const char* field = "Q(i)";
};

/**
 * \brief a + b*theta in a quadratic extension of Q.
 *
 * Only the two fields needed for one-dimensional characters of Z/3 and Z/4.
 */
template <class Tag>
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int a) : a_(a) {}
    QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt theta() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& re() const { return a_; }
    const Rational& im() const { return b_; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    QuadExt operator-() const { return {-a_, -b_}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        // (a + b t)(c + d t) = ac + bd P + (ad + bc + bd Q) t
        if (x.is_zero() || y.is_zero()) return {};
        if (y.b_.is_zero()) return {x.a_ * y.a_, x.b_ * y.a_};
        if (x.b_.is_zero()) return {x.a_ * y.a_, x.a_ * y.b_};
        Rational bd = x.b_ * y.b_;
        return {x.a_ * y.a_ + bd * Tag::P, x.a_ * y.b_ + x.b_ * y.a_ + bd * Tag::Q};
    }
    QuadExt conj() const { return {a_ + b_ * Tag::Q, -b_}; }
    Rational norm() const { return a_ * a_ + a_ * b_ * Tag::Q - b_ * b_ * Tag::P; }
    QuadExt inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("division by zero");
        QuadExt c = conj();
        return {c.a_ / n, c.b_ / n};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    QuadExt& operator+=(const QuadExt& y) {
        a_ += y.a_;
        b_ += y.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& y) {
        a_ -= y.a_;
        b_ -= y.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator==(const QuadExt& x, int n) { return x.b_.is_zero() && x.a_ == n; }
    friend bool operator!=(const QuadExt& x, int n) { return !(x == n); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) {
        return x.a_ < y.a_ || (x.a_ == y.a_ && x.b_ < y.b_);
    }

private:
    Rational a_{0}, b_{0};
};

template <class Tag>
std::string to_string(const QuadExt<Tag>& x) {
    if (x.im() == 0) return to_string(x.re());
    return to_string(x.re()) + "+" + to_string(x.im()) + "*" + Tag::symbol;
}

using QOmega = QuadExt<EisensteinTag>;
using QI = QuadExt<GaussianTag>;

template <class S>
struct ScalarName;
template <>
struct ScalarName<Rational> {
    static constexpr const char* value = "Q";
};
template <class Tag>
struct ScalarName<QuadExt<Tag>> {
    static constexpr const char* value = Tag::field;
};

}  // namespace cohere
