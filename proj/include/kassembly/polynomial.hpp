#pragma once

#include "kassembly/rational.hpp"

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kassembly {

// Integer-coefficient polynomial in one variable t, stored densely by
// ascending degree with no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;

    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int c) {
        IntPoly p;
        if (c != 0) p.c_.push_back(std::move(c));
        return p;
    }

    static IntPoly monomial(Int coeff, int degree) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(degree) + 1, Int(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Int coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return Int(0);
        return c_[static_cast<std::size_t>(d)];
    }

    Int constant_term() const { return coeff(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return IntPoly(std::move(out));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    IntPoly operator-() const {
        IntPoly out(*this);
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(out));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    // Human-readable form, e.g. "1 - t^4" or "t^3 + 2*t^5".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d <= degree(); ++d) {
            const Int& c = c_[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            Int mag = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (d == 0) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << "*";
                os << "t";
                if (d > 1) os << "^" << d;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

} // namespace kassembly
