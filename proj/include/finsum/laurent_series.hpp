#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finsum/polynomial.hpp"
#include "finsum/rational.hpp"

namespace finsum {

/// Order reported for series known exactly at every order (finite sums).
inline constexpr long kExactOrder = 1L << 28;

namespace detail {

inline long sat_add(long a, long b) {
    if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
    return std::min(a + b, kExactOrder);
}

}  // namespace detail

/// Truncated Laurent series sum_{k >= start} c_k x^k. Every value carries its
/// precision: the largest order through which all coefficients are exact.
/// Reading a coefficient past the precision throws std::out_of_range.
template <class C>
class LaurentSeries {
public:
    LaurentSeries() : precision_(kExactOrder) {}

    /// Coefficients `coeffs[i]` multiply x^(start + i); terms above
    /// `precision` are discarded.
    LaurentSeries(long start, std::vector<C> coeffs, long precision = kExactOrder)
        : start_(start), coeffs_(std::move(coeffs)), precision_(precision) {
        normalize();
    }

    static LaurentSeries zero(long precision = kExactOrder) { return LaurentSeries(0, {}, precision); }
    static LaurentSeries constant(const C& c, long precision = kExactOrder) { return LaurentSeries(0, {c}, precision); }
    static LaurentSeries monomial(const C& c, long order, long precision = kExactOrder) {
        return LaurentSeries(order, {c}, precision);
    }
    static LaurentSeries from_poly(const Poly<C>& p, long precision = kExactOrder) {
        return LaurentSeries(0, p.coefficients(), precision);
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return precision_ >= kExactOrder; }
    long precision() const { return precision_; }
    /// Lowest order with a nonzero coefficient; precision + 1 for a zero series.
    long valuation() const { return is_zero() ? detail::sat_add(precision_, 1) : start_; }
    /// Highest stored order (start - 1 when zero).
    long top_order() const { return start_ + static_cast<long>(coeffs_.size()) - 1; }

    C coeff(long k) const {
        if (k > precision_) {
            throw std::out_of_range("series coefficient " + std::to_string(k) + " beyond precision " +
                                    std::to_string(precision_));
        }
        if (k < start_ || k > top_order()) return C(Rational(0));
        return coeffs_[static_cast<std::size_t>(k - start_)];
    }

    LaurentSeries truncated(long order) const {
        LaurentSeries r = *this;
        r.precision_ = std::min(precision_, order);
        r.normalize();
        return r;
    }

    /// Multiplies by x^k.
    LaurentSeries shifted(long k) const {
        LaurentSeries r = *this;
        r.start_ += k;
        r.precision_ = detail::sat_add(precision_, k);
        return r;
    }

    LaurentSeries scaled(const C& s) const {
        std::vector<C> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(c * s);
        return LaurentSeries(start_, std::move(v), precision_);
    }

    LaurentSeries derivative() const {
        std::vector<C> v;
        v.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            v.push_back(coeffs_[i] * C(Rational(start_ + static_cast<long>(i))));
        }
        return LaurentSeries(start_ - 1, std::move(v), is_exact() ? kExactOrder : precision_ - 1);
    }

    template <class D, class F>
    LaurentSeries<D> map(F&& f) const {
        std::vector<D> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(f(c));
        return LaurentSeries<D>(start_, std::move(v), precision_);
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }
    friend LaurentSeries operator-(const LaurentSeries& a) { return a.scaled(C(Rational(-1))); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const long prec = std::min(detail::sat_add(a.precision_, b.valuation()),
                                   detail::sat_add(b.precision_, a.valuation()));
        if (a.is_zero() || b.is_zero()) return zero(prec);
        const long start = a.start_ + b.start_;
        long top = a.top_order() + b.top_order();
        if (prec < kExactOrder) top = std::min(top, prec);
        if (top < start) return zero(prec);
        std::vector<C> v(static_cast<std::size_t>(top - start + 1), C(Rational(0)));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<long>(i + j) < static_cast<long>(v.size()); ++j) {
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return LaurentSeries(start, std::move(v), prec);
    }

    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    /// Structural equality: same precision and same coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.precision_ == b.precision_ && a.start_ == b.start_ && a.coeffs_ == b.coeffs_;
    }

private:
    static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
        const long prec = std::min(a.precision_, b.precision_);
        if (a.is_zero() && b.is_zero()) return zero(prec);
        long start = a.is_zero() ? b.start_ : (b.is_zero() ? a.start_ : std::min(a.start_, b.start_));
        long top = std::max(a.top_order(), b.top_order());
        if (prec < kExactOrder) top = std::min(top, prec);
        if (top < start) return zero(prec);
        std::vector<C> v;
        v.reserve(static_cast<std::size_t>(top - start + 1));
        for (long k = start; k <= top; ++k) {
            const C x = a.raw(k);
            const C y = b.raw(k);
            v.push_back(subtract ? x - y : x + y);
        }
        return LaurentSeries(start, std::move(v), prec);
    }

    C raw(long k) const {
        if (k < start_ || k > top_order()) return C(Rational(0));
        return coeffs_[static_cast<std::size_t>(k - start_)];
    }

    void normalize() {
        if (precision_ < kExactOrder && top_order() > precision_) {
            const long keep = precision_ - start_ + 1;
            coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
        }
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && detail::coeff_is_zero(coeffs_[lead])) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            start_ += static_cast<long>(lead);
        }
        if (coeffs_.empty()) start_ = 0;
    }

    long start_ = 0;
    std::vector<C> coeffs_;
    long precision_;
};

template <class C>
bool is_zero(const LaurentSeries<C>& s) { return s.is_zero(); }

/// Quotient a / b. The result is exact through
/// (va - vb) + min(pa - va, pb - vb); when both inputs are exact the caller
/// must supply the order `T` through which the quotient is wanted.
template <class C>
LaurentSeries<C> divide(const LaurentSeries<C>& a, const LaurentSeries<C>& b, long T = kExactOrder) {
    if (b.is_zero()) throw std::domain_error("series division by zero");
    const long vb = b.valuation();
    const long va = a.is_zero() ? detail::sat_add(a.precision(), 1) : a.valuation();
    long prec;
    if (a.is_exact() && b.is_exact()) {
        if (T >= kExactOrder) {
            throw std::invalid_argument("series division of exact inputs needs an explicit order");
        }
        prec = T;
    } else {
        const long rel_a = a.is_exact() ? kExactOrder : a.precision() - va;
        const long rel_b = b.is_exact() ? kExactOrder : b.precision() - vb;
        prec = std::min(detail::sat_add(va - vb, std::min(rel_a, rel_b)), T);
    }
    if (a.is_zero()) return LaurentSeries<C>::zero(prec);
    const long start = va - vb;
    if (prec < start) return LaurentSeries<C>::zero(prec);
    const C lead_inv = inverse(b.coeff(vb));
    const std::size_t count = static_cast<std::size_t>(prec - start + 1);
    std::vector<C> r;
    r.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        C acc = a.coeff(va + static_cast<long>(i));
        for (std::size_t j = 0; j < i; ++j) {
            const long bk = vb + static_cast<long>(i - j);
            if (bk > b.top_order()) continue;
            acc = acc - r[j] * b.coeff(bk);
        }
        r.push_back(acc * lead_inv);
    }
    return LaurentSeries<C>(start, std::move(r), prec);
}

/// Integer power by repeated squaring; negative exponents divide into 1
/// through order `T`.
template <class C>
LaurentSeries<C> pow(const LaurentSeries<C>& base, long exponent, long T = kExactOrder) {
    if (exponent < 0) {
        return pow(divide(LaurentSeries<C>::constant(C(Rational(1))), base, T), -exponent, T);
    }
    LaurentSeries<C> result = LaurentSeries<C>::constant(C(Rational(1)));
    LaurentSeries<C> b = base;
    if (T < kExactOrder) b = b.truncated(T + std::max(0L, -b.valuation()) * exponent);
    while (exponent > 0) {
        if (exponent & 1) result = result * b;
        exponent >>= 1;
        if (exponent > 0) b = b * b;
    }
    return T < kExactOrder ? result.truncated(T) : result;
}

/// outer(inner(x)) for inner with zero constant term. Exact through
/// min(T, vi * (po + 1) - 1, pi).
template <class C>
LaurentSeries<C> compose(const LaurentSeries<C>& outer, const LaurentSeries<C>& inner, long T) {
    if (inner.is_zero() && inner.is_exact()) {
        return LaurentSeries<C>::constant(outer.coeff(0), T);
    }
    const long vi = inner.valuation();
    if (vi < 1) throw std::domain_error("composition needs an inner series without constant term");
    if (!outer.is_zero() && outer.valuation() < 0) {
        throw std::domain_error("composition needs an outer series without negative powers");
    }
    long prec = T;
    if (!outer.is_exact()) prec = std::min(prec, vi * (outer.precision() + 1) - 1);
    prec = std::min(prec, inner.precision());
    const LaurentSeries<C> in = inner.truncated(prec);
    const long max_k = std::min(outer.is_exact() ? outer.top_order() : outer.precision(), prec / vi);
    // Horner evaluation truncated at `prec`.
    LaurentSeries<C> acc = LaurentSeries<C>::zero(prec);
    for (long k = max_k; k >= 0; --k) {
        acc = (acc * in).truncated(prec) + LaurentSeries<C>::constant(outer.coeff(k), prec);
    }
    return acc.truncated(prec);
}

/// 1 + x + x^2 + ... exact through T.
template <class C = Rational>
LaurentSeries<C> series_geometric(long T) {
    return LaurentSeries<C>(0, std::vector<C>(static_cast<std::size_t>(std::max(T + 1, 0L)), C(Rational(1))), T);
}

/// Newton-Mercator series ln(1 + x) exact through T.
template <class C = Rational>
LaurentSeries<C> series_mercator(long T) {
    std::vector<C> v(static_cast<std::size_t>(std::max(T + 1, 0L)), C(Rational(0)));
    for (long j = 1; j <= T; ++j) v[static_cast<std::size_t>(j)] = C(Rational(j % 2 == 1 ? 1 : -1, j));
    return LaurentSeries<C>(0, std::move(v), T);
}

/// exp(x) exact through T.
template <class C = Rational>
LaurentSeries<C> series_exp(long T) {
    std::vector<C> v;
    mpz_class f = 1;
    for (long j = 0; j <= T; ++j) {
        if (j > 0) f *= j;
        v.push_back(C(Rational(mpz_class(1), f)));
    }
    return LaurentSeries<C>(0, std::move(v), T);
}

/// ln(1 + u) through T by composition; u must have zero constant term.
template <class C>
LaurentSeries<C> series_log_one_plus(const LaurentSeries<C>& u, long T) {
    if (!u.is_zero() && u.valuation() < 1) {
        throw std::domain_error("ln(1+u) needs u without constant term");
    }
    if (u.is_zero()) return LaurentSeries<C>::zero(std::min(T, u.precision()));
    return compose(series_mercator<C>(T), u, T);
}

/// exp(u) through T; u must have zero constant term.
template <class C>
LaurentSeries<C> series_exp_of(const LaurentSeries<C>& u, long T) {
    if (u.is_zero()) return LaurentSeries<C>::constant(C(Rational(1)), std::min(T, u.precision()));
    return compose(series_exp<C>(T), u, T);
}

/// Coefficients at orders lo..hi as a vector.
template <class C>
std::vector<C> coefficients_between(const LaurentSeries<C>& s, long lo, long hi) {
    std::vector<C> v;
    for (long k = lo; k <= hi; ++k) v.push_back(s.coeff(k));
    return v;
}

template <class C>
std::string to_string(const LaurentSeries<C>& s, std::string_view var = "z") {
    std::string out;
    for (long k = s.valuation(); !s.is_zero() && k <= s.top_order(); ++k) {
        const C c = s.coeff(k);
        if (is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (k != 0) out += "*" + std::string(var) + "^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    if (!s.is_exact()) out += " + O(" + std::string(var) + "^" + std::to_string(s.precision() + 1) + ")";
    return out;
}

}  // namespace finsum
