#pragma once

#include "kassembly/errors.hpp"
#include "kassembly/polynomial.hpp"
#include "kassembly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kassembly {

// Power series over Q known exactly through a fixed cutoff degree.
// Immutable; binary operations truncate to the smaller cutoff, and equality
// compares coefficients through the common cutoff only.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cutoff) : cutoff_(check_cutoff(cutoff)) {
        c_.assign(static_cast<std::size_t>(cutoff_) + 1, Rat(0));
    }

    TruncatedSeries(int cutoff, std::vector<Rat> coeffs) : cutoff_(check_cutoff(cutoff)), c_(std::move(coeffs)) {
        if (c_.size() > static_cast<std::size_t>(cutoff_) + 1)
            throw std::invalid_argument("TruncatedSeries: more coefficients than the cutoff admits");
        c_.resize(static_cast<std::size_t>(cutoff_) + 1, Rat(0));
    }

    static TruncatedSeries zero(int cutoff) { return TruncatedSeries(cutoff); }

    static TruncatedSeries one(int cutoff) { return monomial(0, cutoff); }

    static TruncatedSeries monomial(int degree, int cutoff, const Rat& coeff = Rat(1)) {
        TruncatedSeries s(cutoff);
        if (degree < 0) throw std::invalid_argument("TruncatedSeries::monomial: negative degree");
        if (degree <= cutoff) s.c_[static_cast<std::size_t>(degree)] = coeff;
        return s;
    }

    int cutoff() const { return cutoff_; }

    const Rat& coeff(int degree) const {
        if (degree < 0 || degree > cutoff_)
            throw std::out_of_range("TruncatedSeries::coeff: degree " + std::to_string(degree) +
                                    " outside [0, " + std::to_string(cutoff_) + "]");
        return c_[static_cast<std::size_t>(degree)];
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
    }

    TruncatedSeries truncated(int new_cutoff) const {
        if (new_cutoff > cutoff_)
            throw std::invalid_argument("TruncatedSeries::truncated: cannot extend a truncation");
        TruncatedSeries out(new_cutoff);
        std::copy(c_.begin(), c_.begin() + new_cutoff + 1, out.c_.begin());
        return out;
    }

    // Coefficients in degrees >= 1; the constant term is dropped.
    TruncatedSeries positive_part() const {
        TruncatedSeries out(*this);
        out.c_[0] = 0;
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.cutoff_, b.cutoff_));
        for (int d = 0; d <= out.cutoff_; ++d)
            out.c_[static_cast<std::size_t>(d)] = a.coeff(d) + b.coeff(d);
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.cutoff_, b.cutoff_));
        for (int d = 0; d <= out.cutoff_; ++d)
            out.c_[static_cast<std::size_t>(d)] = a.coeff(d) - b.coeff(d);
        return out;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out(*this);
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.cutoff_, b.cutoff_));
        for (int i = 0; i <= out.cutoff_; ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = 0; i + j <= out.cutoff_; ++j)
                out.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return out;
    }

    friend TruncatedSeries operator*(const Rat& s, const TruncatedSeries& a) {
        TruncatedSeries out(a);
        for (auto& c : out.c_) c *= s;
        return out;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (b.coeff(0) == 0)
            throw non_unit_divisor("series division requires an invertible constant term");
        TruncatedSeries out(std::min(a.cutoff_, b.cutoff_));
        for (int d = 0; d <= out.cutoff_; ++d) {
            Rat acc = a.coeff(d);
            for (int i = 1; i <= d; ++i) acc -= b.coeff(i) * out.c_[static_cast<std::size_t>(d - i)];
            out.c_[static_cast<std::size_t>(d)] = acc / b.coeff(0);
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        int common = std::min(a.cutoff_, b.cutoff_);
        for (int d = 0; d <= common; ++d)
            if (a.coeff(d) != b.coeff(d)) return false;
        return true;
    }

    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    static int check_cutoff(int cutoff) {
        if (cutoff < 0) throw std::invalid_argument("TruncatedSeries: cutoff must be >= 0");
        return cutoff;
    }

    int cutoff_;
    std::vector<Rat> c_;
};

enum class SeriesOp { add, sub, mul, div };

// Dispatch form of the ring operations; div throws non_unit_divisor when the
// divisor's constant term vanishes.
inline TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return a + b;
        case SeriesOp::sub: return a - b;
        case SeriesOp::mul: return a * b;
        case SeriesOp::div: return a / b;
    }
    throw std::invalid_argument("series_arith: unknown operation");
}

// Smallest degree (through the common cutoff) where the two series disagree.
inline std::optional<int> first_difference_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
    int common = std::min(a.cutoff(), b.cutoff());
    for (int d = 0; d <= common; ++d)
        if (a.coeff(d) != b.coeff(d)) return d;
    return std::nullopt;
}

// Canonical text form: nonzero terms by ascending degree joined by " + ",
// "c" in degree zero and "c*t^d" above, with exact rational c. Zero is "0".
inline std::string to_text(const TruncatedSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= s.cutoff(); ++d) {
        if (s.coeff(d) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(s.coeff(d));
        if (d > 0) os << "*t^" << d;
    }
    if (first) return "0";
    return os.str();
}

// One "degree<TAB>coefficient" line per degree from 0 through the cutoff.
inline std::string to_tsv(const TruncatedSeries& s) {
    std::ostringstream os;
    for (int d = 0; d <= s.cutoff(); ++d)
        os << d << '\t' << to_string(s.coeff(d)) << '\n';
    return os.str();
}

// Quotient of integer polynomials, kept unreduced. The denominator must have
// a nonzero constant term so the quotient expands as a power series.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(IntPoly::constant(1)) {}

    RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.constant_term() == 0)
            throw invalid_rational_function("denominator has zero constant term: " + den_.to_string());
    }

    static RationalFunction constant(Int c) {
        return RationalFunction(IntPoly::constant(std::move(c)), IntPoly::constant(1));
    }

    static RationalFunction from_poly(IntPoly p) {
        return RationalFunction(std::move(p), IntPoly::constant(1));
    }

    static RationalFunction t_power(int degree) {
        return from_poly(IntPoly::monomial(1, degree));
    }

    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.constant_term() == 0)
            throw invalid_rational_function("division by a rational function with zero constant term");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction pow(int e) const {
        if (e < 0) throw invalid_rational_function("negative exponent");
        RationalFunction acc = constant(1);
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    // Equality as rational functions (cross-multiplied), not of representations.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string() const {
        if (den_ == IntPoly::constant(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    IntPoly num_;
    IntPoly den_;
};

// Power-series expansion of num/den through the cutoff, by the division
// recurrence c_n = (num_n - sum_{i>=1} den_i c_{n-i}) / den_0.
inline TruncatedSeries expand(const RationalFunction& f, int cutoff) {
    TruncatedSeries out(cutoff);
    const IntPoly& num = f.numerator();
    const IntPoly& den = f.denominator();
    Rat den0(den.constant_term());
    std::vector<Rat> c(static_cast<std::size_t>(cutoff) + 1, Rat(0));
    for (int n = 0; n <= cutoff; ++n) {
        Rat acc(num.coeff(n));
        for (int i = 1; i <= std::min(n, den.degree()); ++i)
            acc -= Rat(den.coeff(i)) * c[static_cast<std::size_t>(n - i)];
        c[static_cast<std::size_t>(n)] = acc / den0;
    }
    return TruncatedSeries(cutoff, std::move(c));
}

// Product over k = 1, 2, ... of factor(k), truncated at the cutoff. Each
// factor must have constant term 1, and the factors must converge: f(k) - 1
// must vanish in ever-higher degrees as k grows, so that only finitely many
// factors touch the window. Throws divergent_product otherwise.
inline TruncatedSeries infinite_product(const std::function<RationalFunction(int)>& factor, int cutoff) {
    TruncatedSeries acc = TruncatedSeries::one(cutoff);
    int last_onset = 0;
    for (int k = 1;; ++k) {
        TruncatedSeries f = expand(factor(k), cutoff);
        if (f.coeff(0) != 1)
            throw divergent_product("factor " + std::to_string(k) + " has constant term " +
                                    to_string(f.coeff(0)) + ", expected 1");
        int onset = 0; // least positive degree where the factor differs from 1
        for (int d = 1; d <= cutoff; ++d) {
            if (f.coeff(d) != 0) {
                onset = d;
                break;
            }
        }
        if (onset == 0) {
            // Factor is 1 through the window; require the tail to stay that way.
            // A strictly increasing onset sequence guarantees it for the
            // standard generator-indexed products; accept and stop.
            return acc;
        }
        if (onset <= last_onset)
            throw divergent_product("factor onsets fail to increase: factor " + std::to_string(k) +
                                    " begins at degree " + std::to_string(onset));
        last_onset = onset;
        acc = acc * f;
        if (last_onset >= cutoff) return acc;
    }
}

namespace detail {

// Recursive-descent parser for rational-function text:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/')? factor)*        (juxtaposition multiplies)
//   factor := ('+' | '-') factor | atom ('^' nat)?
//   atom   := nat | 't' | '(' expr ')'
class RfParser {
public:
    explicit RfParser(std::string_view text) : text_(text) {}

    RationalFunction parse() {
        RationalFunction f = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected character '" + std::string(1, text_[pos_]) +
                              "' at position " + std::to_string(pos_));
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::optional<char> peek() {
        skip_ws();
        if (pos_ >= text_.size()) return std::nullopt;
        return text_[pos_];
    }

    bool starts_atom() {
        auto c = peek();
        return c && (*c == 't' || *c == '(' || std::isdigit(static_cast<unsigned char>(*c)));
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (auto c = peek()) {
            if (*c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (*c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            auto c = peek();
            if (c && *c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c && *c == '/') {
                ++pos_;
                RationalFunction d = factor();
                if (d.numerator().constant_term() == 0)
                    throw invalid_rational_function("divisor has zero constant term: " + d.to_string());
                acc = acc / d;
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    RationalFunction factor() {
        auto c = peek();
        if (!c) throw parse_error("unexpected end of input");
        if (*c == '-') {
            ++pos_;
            return -factor();
        }
        if (*c == '+') {
            ++pos_;
            return factor();
        }
        RationalFunction base = atom();
        if (auto p = peek(); p && *p == '^') {
            ++pos_;
            return base.pow(natural());
        }
        return base;
    }

    RationalFunction atom() {
        auto c = peek();
        if (!c) throw parse_error("unexpected end of input");
        if (*c == 't') {
            ++pos_;
            return RationalFunction::t_power(1);
        }
        if (*c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            if (auto p = peek(); !p || *p != ')')
                throw parse_error("missing ')' at position " + std::to_string(pos_));
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(*c)))
            return RationalFunction::constant(Int(natural()));
        throw parse_error("unexpected character '" + std::string(1, *c) + "' at position " +
                          std::to_string(pos_));
    }

    int natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected a number at position " + std::to_string(pos_));
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000LL) throw parse_error("number too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RationalFunction parse_rational_function(std::string_view text) {
    return detail::RfParser(text).parse();
}

} // namespace kassembly
