#ifndef QHEIS_SERIES_HPP
#define QHEIS_SERIES_HPP

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qheis {

using Rational = boost::multiprecision::cpp_rational;

/// Truncation orders: terms h^a w^b with a >= kh or b >= kw are dropped.
struct Truncation {
    int kh = 4;
    int kw = 4;
    friend bool operator==(const Truncation &, const Truncation &) = default;
};

inline void require_same(const Truncation &a, const Truncation &b) {
    if (!(a == b))
        throw std::invalid_argument("truncation mismatch: (" + std::to_string(a.kh) + "," +
                                    std::to_string(a.kw) + ") vs (" + std::to_string(b.kh) + "," +
                                    std::to_string(b.kw) + ")");
}

/// Bivariate formal power series in the deformation parameters h and w,
/// truncated at orders (kh, kw), with exact rational coefficients.
/// Canonical sparse form: no zero coefficients, no out-of-range exponents.
class TruncatedSeries {
  public:
    using Key = std::pair<int, int>; // (power of h, power of w)

    explicit TruncatedSeries(Truncation t = {}) : trunc_(t) {}

    static TruncatedSeries constant(const Rational &c, Truncation t = {}) {
        TruncatedSeries s(t);
        s.add_term(0, 0, c);
        return s;
    }
    static TruncatedSeries monomial(const Rational &c, int a, int b, Truncation t = {}) {
        TruncatedSeries s(t);
        s.add_term(a, b, c);
        return s;
    }
    static TruncatedSeries one(Truncation t = {}) { return constant(1, t); }
    static TruncatedSeries h(Truncation t = {}) { return monomial(1, 1, 0, t); }
    static TruncatedSeries w(Truncation t = {}) { return monomial(1, 0, 1, t); }

    const Truncation &truncation() const { return trunc_; }
    const std::map<Key, Rational> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == Key{0, 0} &&
               coeffs_.begin()->second == 1;
    }

    Rational coeff(int a, int b) const {
        auto it = coeffs_.find({a, b});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    /// Adds c * h^a * w^b, dropping out-of-range terms and canceling zeros.
    void add_term(int a, int b, const Rational &c) {
        if (a < 0 || b < 0)
            throw std::invalid_argument("negative exponent in series term");
        if (c == 0 || a >= trunc_.kh || b >= trunc_.kw)
            return;
        auto [it, fresh] = coeffs_.try_emplace({a, b}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }

    /// Minimal total parameter order a+b over stored terms; INT_MAX when zero.
    int min_order() const {
        int m = INT_MAX;
        for (const auto &[k, c] : coeffs_)
            m = std::min(m, k.first + k.second);
        return m;
    }
    bool is_param_positive() const { return min_order() >= 1; }

    friend TruncatedSeries operator+(const TruncatedSeries &x, const TruncatedSeries &y) {
        require_same(x.trunc_, y.trunc_);
        TruncatedSeries r = x;
        for (const auto &[k, c] : y.coeffs_)
            r.add_term(k.first, k.second, c);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries &x, const TruncatedSeries &y) {
        require_same(x.trunc_, y.trunc_);
        TruncatedSeries r = x;
        for (const auto &[k, c] : y.coeffs_)
            r.add_term(k.first, k.second, -c);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries &x) {
        TruncatedSeries r(x.trunc_);
        for (const auto &[k, c] : x.coeffs_)
            r.coeffs_.emplace(k, -c);
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries &x, const TruncatedSeries &y) {
        require_same(x.trunc_, y.trunc_);
        TruncatedSeries r(x.trunc_);
        for (const auto &[kx, cx] : x.coeffs_)
            for (const auto &[ky, cy] : y.coeffs_)
                r.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries &x, const Rational &c) {
        TruncatedSeries r(x.trunc_);
        for (const auto &[k, v] : x.coeffs_)
            r.add_term(k.first, k.second, v * c);
        return r;
    }
    friend TruncatedSeries operator*(const Rational &c, const TruncatedSeries &x) { return x * c; }

    TruncatedSeries &operator+=(const TruncatedSeries &y) { return *this = *this + y; }
    TruncatedSeries &operator-=(const TruncatedSeries &y) { return *this = *this - y; }
    TruncatedSeries &operator*=(const TruncatedSeries &y) { return *this = *this * y; }

    friend bool operator==(const TruncatedSeries &x, const TruncatedSeries &y) {
        return x.trunc_ == y.trunc_ && x.coeffs_ == y.coeffs_;
    }

    /// Re-truncates to (possibly smaller) orders. Raising an order is not
    /// meaningful for already-truncated data and is rejected.
    TruncatedSeries truncate(Truncation t) const {
        if (t.kh > trunc_.kh || t.kw > trunc_.kw)
            throw std::invalid_argument("cannot raise truncation order of an existing series");
        TruncatedSeries r(t);
        for (const auto &[k, c] : coeffs_)
            r.add_term(k.first, k.second, c);
        return r;
    }

    std::string str() const {
        if (coeffs_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[k, c] : coeffs_) {
            if (!first)
                os << " + ";
            first = false;
            os << c.str();
            if (k.first > 0)
                os << " * h^" << k.first;
            if (k.second > 0)
                os << " * w^" << k.second;
        }
        return os.str();
    }

  private:
    std::map<Key, Rational> coeffs_;
    Truncation trunc_;
};

/// exp of a series with zero constant term (truncation-nilpotent).
inline TruncatedSeries exp_series(const TruncatedSeries &x) {
    if (!x.is_param_positive() && !x.is_zero())
        throw std::invalid_argument("exp_series: nonzero constant term");
    TruncatedSeries r = TruncatedSeries::one(x.truncation());
    TruncatedSeries p = TruncatedSeries::one(x.truncation());
    Rational fact = 1;
    for (int n = 1; !p.is_zero(); ++n) {
        p *= x;
        fact *= n;
        if (p.is_zero())
            break;
        r += p * Rational(1 / fact);
    }
    return r;
}

enum class Param { h, w };

/// sinh(param * x) / param = sum_n param^{2n} x^{2n+1} / (2n+1)!.
inline TruncatedSeries sinh_over(const TruncatedSeries &x, Param p) {
    const Truncation t = x.truncation();
    const TruncatedSeries pp =
        p == Param::h ? TruncatedSeries::h(t) : TruncatedSeries::w(t);
    const TruncatedSeries p2 = pp * pp;
    TruncatedSeries r(t);
    TruncatedSeries term = x; // param^{2n} x^{2n+1}
    Rational fact = 1;        // (2n+1)!
    for (int n = 0; !term.is_zero(); ++n) {
        r += term * Rational(1 / fact);
        term = term * p2 * x * x;
        fact *= (2 * n + 2) * (2 * n + 3);
    }
    return r;
}

/// (exp(param * x) - 1) / param = sum_n param^n x^{n+1} / (n+1)!.
inline TruncatedSeries expm1_over(const TruncatedSeries &x, Param p) {
    const Truncation t = x.truncation();
    const TruncatedSeries pp =
        p == Param::h ? TruncatedSeries::h(t) : TruncatedSeries::w(t);
    TruncatedSeries r(t);
    TruncatedSeries term = x;
    Rational fact = 1;
    for (int n = 0; !term.is_zero(); ++n) {
        r += term * Rational(1 / fact);
        term = term * pp * x;
        fact *= n + 2;
    }
    return r;
}

} // namespace qheis

#endif
