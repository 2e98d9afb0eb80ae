#pragma once

#include "kassembly/errors.hpp"
#include "kassembly/rational.hpp"
#include "kassembly/series.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kassembly {

// Parity is derived from the degree: even generators are polynomial, odd
// generators are exterior (square zero), as graded commutativity forces over Q.
struct GeneratorSpec {
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
};

class FreeGradedAlgebra;

// Product of generator powers, tagged with the owning algebra's fingerprint
// so cross-algebra mixing is caught. Ordering is degree then exponent-vector
// lexicographic, which restricts to plain lexicographic within one degree.
class Monomial {
public:
    Monomial() = default;

    int degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.fp_ == b.fp_ && a.exps_ == b.exps_;
    }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.fp_ <=> b.fp_; c != 0) return c;
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.exps_ <=> b.exps_;
    }

private:
    friend class FreeGradedAlgebra;

    Monomial(std::uint64_t fp, int degree, std::vector<int> exps)
        : fp_(fp), degree_(degree), exps_(std::move(exps)) {}

    std::uint64_t fp_ = 0;
    int degree_ = 0;
    std::vector<int> exps_;
};

// Product in a graded-commutative algebra: either zero (an exterior square)
// or a monomial with the Koszul sign of sorting the factors.
struct SignedMonomial {
    int sign = 0; // +1, -1, or 0 for the zero product
    Monomial value;

    bool is_zero() const { return sign == 0; }
};

using Combination = std::map<Monomial, Rat>;

inline void add_term(Combination& c, const Monomial& m, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

class FreeGradedAlgebra {
public:
    FreeGradedAlgebra() : FreeGradedAlgebra(std::vector<GeneratorSpec>{}) {}

    explicit FreeGradedAlgebra(std::vector<GeneratorSpec> generators) {
        for (const auto& g : generators) {
            if (g.degree < 1)
                throw std::invalid_argument("generator '" + g.name + "' must have degree >= 1");
            if (g.name.empty()) throw std::invalid_argument("generator with empty name");
        }
        for (std::size_t i = 0; i < generators.size(); ++i)
            for (std::size_t j = i + 1; j < generators.size(); ++j)
                if (generators[i].name == generators[j].name)
                    throw std::invalid_argument("duplicate generator name '" + generators[i].name + "'");
        auto data = std::make_shared<Data>();
        data->gens = std::move(generators);
        data->fp = fingerprint_of(data->gens);
        data_ = std::move(data);
    }

    int generator_count() const { return static_cast<int>(data_->gens.size()); }
    const GeneratorSpec& generator(int i) const { return data_->gens[static_cast<std::size_t>(i)]; }
    const std::vector<GeneratorSpec>& generators() const { return data_->gens; }

    std::optional<int> find_generator(std::string_view name) const {
        for (int i = 0; i < generator_count(); ++i)
            if (data_->gens[static_cast<std::size_t>(i)].name == name) return i;
        return std::nullopt;
    }

    std::uint64_t fingerprint() const { return data_->fp; }

    bool owns(const Monomial& m) const {
        return m.fp_ == data_->fp && m.exps_.size() == data_->gens.size();
    }

    Monomial unit() const {
        return Monomial(data_->fp, 0, std::vector<int>(data_->gens.size(), 0));
    }

    Monomial generator_monomial(int i) const {
        std::vector<int> e(data_->gens.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return Monomial(data_->fp, generator(i).degree, std::move(e));
    }

    Monomial make_monomial(std::vector<int> exps) const {
        if (exps.size() != data_->gens.size())
            throw std::invalid_argument("exponent vector length mismatch");
        int degree = 0;
        for (int i = 0; i < generator_count(); ++i) {
            int e = exps[static_cast<std::size_t>(i)];
            if (e < 0) throw std::invalid_argument("negative exponent");
            if (generator(i).odd() && e > 1)
                throw std::invalid_argument("odd generator '" + generator(i).name +
                                            "' with exponent " + std::to_string(e));
            degree += e * generator(i).degree;
        }
        return Monomial(data_->fp, degree, std::move(exps));
    }

    // All monomials of the given total degree, in exponent-vector
    // lexicographic order (generator-list order, leftmost most significant).
    std::vector<Monomial> basis(int degree) const {
        std::vector<Monomial> out;
        if (degree < 0) return out;
        std::vector<int> exps(data_->gens.size(), 0);
        basis_rec(0, degree, exps, out);
        return out;
    }

    SignedMonomial multiply(const Monomial& a, const Monomial& b) const {
        require_owned(a);
        require_owned(b);
        const int n = generator_count();
        for (int i = 0; i < n; ++i)
            if (generator(i).odd() && a.exps_[static_cast<std::size_t>(i)] + b.exps_[static_cast<std::size_t>(i)] > 1)
                return SignedMonomial{};
        // Koszul sign: each odd letter of b passes the odd letters of a that
        // sit to its right in generator order.
        long crossings = 0;
        long odd_right = 0; // odd letters of a with index > j, accumulated from the top
        for (int j = n - 1; j >= 0; --j) {
            if (generator(j).odd()) {
                if (b.exps_[static_cast<std::size_t>(j)] == 1) crossings += odd_right;
                if (a.exps_[static_cast<std::size_t>(j)] == 1) ++odd_right;
            }
        }
        std::vector<int> exps(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            exps[static_cast<std::size_t>(i)] =
                a.exps_[static_cast<std::size_t>(i)] + b.exps_[static_cast<std::size_t>(i)];
        return SignedMonomial{crossings % 2 == 0 ? 1 : -1,
                              Monomial(data_->fp, a.degree_ + b.degree_, std::move(exps))};
    }

    Combination multiply(const Combination& a, const Combination& b) const {
        Combination out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                SignedMonomial p = multiply(ma, mb);
                if (!p.is_zero()) add_term(out, p.value, ca * cb * p.sign);
            }
        return out;
    }

    Combination multiply(const Monomial& a, const Combination& b) const {
        Combination left;
        left.emplace(a, Rat(1));
        return multiply(left, b);
    }

    Combination multiply(const Combination& a, const Monomial& b) const {
        Combination right;
        right.emplace(b, Rat(1));
        return multiply(a, right);
    }

    // Coefficient of t^d is |basis(d)|: the product of (1+t^deg) over odd
    // generators and 1/(1-t^deg) over even ones, expanded.
    TruncatedSeries poincare_series(int cutoff) const {
        TruncatedSeries acc = TruncatedSeries::one(cutoff);
        for (const auto& g : data_->gens) {
            RationalFunction f =
                g.odd() ? RationalFunction(IntPoly::constant(1) + IntPoly::monomial(1, g.degree),
                                           IntPoly::constant(1))
                        : RationalFunction(IntPoly::constant(1),
                                           IntPoly::constant(1) - IntPoly::monomial(1, g.degree));
            acc = acc * expand(f, cutoff);
        }
        return acc;
    }

    std::string format(const Monomial& m) const {
        require_owned(m);
        if (m.is_unit()) return "1";
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < generator_count(); ++i) {
            int e = m.exps_[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!first) os << "*";
            first = false;
            os << generator(i).name;
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    std::string format(const Combination& c) const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, coeff] : c) {
            if (!first) os << " + ";
            first = false;
            if (coeff == 1 && !m.is_unit())
                os << format(m);
            else if (coeff == -1 && !m.is_unit())
                os << "-" << format(m);
            else {
                os << to_string(coeff);
                if (!m.is_unit()) os << "*" << format(m);
            }
        }
        return os.str();
    }

    friend bool operator==(const FreeGradedAlgebra& a, const FreeGradedAlgebra& b) {
        return a.data_->fp == b.data_->fp;
    }

private:
    struct Data {
        std::vector<GeneratorSpec> gens;
        std::uint64_t fp = 0;
    };

    static std::uint64_t fingerprint_of(const std::vector<GeneratorSpec>& gens) {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (const auto& g : gens) {
            for (char ch : g.name) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(ch)));
            mix(0xffu);
            mix(static_cast<std::uint64_t>(g.degree));
        }
        mix(gens.size());
        return h;
    }

    void require_owned(const Monomial& m) const {
        if (!owns(m)) throw algebra_mismatch("monomial does not belong to this algebra");
    }

    void basis_rec(int i, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) const {
        if (i == generator_count()) {
            if (remaining == 0) {
                int degree = 0;
                for (int k = 0; k < generator_count(); ++k)
                    degree += exps[static_cast<std::size_t>(k)] * generator(k).degree;
                out.push_back(Monomial(data_->fp, degree, exps));
            }
            return;
        }
        const GeneratorSpec& g = generator(i);
        int max_e = remaining / g.degree;
        if (g.odd()) max_e = std::min(max_e, 1);
        for (int e = 0; e <= max_e; ++e) {
            exps[static_cast<std::size_t>(i)] = e;
            basis_rec(i + 1, remaining - e * g.degree, exps, out);
        }
        exps[static_cast<std::size_t>(i)] = 0;
    }

    std::shared_ptr<const Data> data_;
};

// Degree-homogeneous derivation determined by generator images. All images
// must share one degree shift s; the graded Leibniz rule
//   D(ab) = D(a)·b + (-1)^{|a|·s} a·D(b)
// extends D to monomials, with D(x^m) = m·x^{m-1}·D(x) for even x.
class Derivation {
public:
    Derivation(FreeGradedAlgebra algebra, std::vector<Combination> generator_images)
        : alg_(std::move(algebra)), images_(std::move(generator_images)) {
        if (static_cast<int>(images_.size()) != alg_.generator_count())
            throw invalid_derivation("expected one image per generator");
        std::optional<int> shift;
        for (int i = 0; i < alg_.generator_count(); ++i) {
            for (const auto& [m, coeff] : images_[static_cast<std::size_t>(i)]) {
                if (!alg_.owns(m))
                    throw invalid_derivation("image of '" + alg_.generator(i).name +
                                             "' lies outside the algebra");
                int s = m.degree() - alg_.generator(i).degree;
                if (shift && *shift != s)
                    throw invalid_derivation("generator images disagree on the degree shift");
                shift = s;
            }
        }
        shift_ = shift.value_or(0);
    }

    const FreeGradedAlgebra& algebra() const { return alg_; }
    int shift() const { return shift_; }
    const Combination& image(int gen) const { return images_[static_cast<std::size_t>(gen)]; }

    Combination apply(const Monomial& m) const {
        if (!alg_.owns(m)) throw algebra_mismatch("monomial does not belong to the derivation's algebra");
        return apply_from(m, 0);
    }

    Combination apply(const Combination& c) const {
        Combination out;
        for (const auto& [m, coeff] : c)
            for (const auto& [m2, c2] : apply(m)) add_term(out, m2, coeff * c2);
        return out;
    }

private:
    // D on the sub-monomial of m supported on generators >= i.
    Combination apply_from(const Monomial& m, int i) const {
        Combination out;
        const int n = alg_.generator_count();
        while (i < n && m.exponent(i) == 0) ++i;
        if (i == n) return out;

        const GeneratorSpec& g = alg_.generator(i);
        const int e = m.exponent(i);

        std::vector<int> head_exps(static_cast<std::size_t>(n), 0);
        head_exps[static_cast<std::size_t>(i)] = e;
        Monomial head = alg_.make_monomial(head_exps);

        std::vector<int> rest_exps = m.exponents();
        rest_exps[static_cast<std::size_t>(i)] = 0;
        Monomial rest = alg_.make_monomial(rest_exps);

        // D(head) · rest
        const Combination& dg = images_[static_cast<std::size_t>(i)];
        if (!dg.empty()) {
            Combination d_head;
            if (g.odd()) {
                d_head = dg;
            } else {
                std::vector<int> pow_exps(static_cast<std::size_t>(n), 0);
                pow_exps[static_cast<std::size_t>(i)] = e - 1;
                Combination scaled;
                for (const auto& [mm, cc] : dg) add_term(scaled, mm, cc * e);
                d_head = alg_.multiply(alg_.make_monomial(pow_exps), scaled);
            }
            for (const auto& [mm, cc] : alg_.multiply(d_head, rest)) add_term(out, mm, cc);
        }

        // (-1)^{|head|·s} head · D(rest)
        Combination d_rest = apply_from(rest, i + 1);
        if (!d_rest.empty()) {
            bool flip = (shift_ % 2 != 0) && (head.degree() % 2 != 0);
            Rat sgn = flip ? Rat(-1) : Rat(1);
            for (const auto& [mm, cc] : alg_.multiply(head, d_rest)) add_term(out, mm, cc * sgn);
        }
        return out;
    }

    FreeGradedAlgebra alg_;
    std::vector<Combination> images_;
    int shift_ = 0;
};

inline Combination derivation_apply(const Derivation& d, const Monomial& m) { return d.apply(m); }

inline Combination derivation_apply(const Derivation& d, const Combination& c) { return d.apply(c); }

} // namespace kassembly
