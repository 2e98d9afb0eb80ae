#pragma once

// Randomized law checks shared by the unit tests and the acceptance runner.
// Every suite runs from a fixed seed, so failures reproduce exactly.

#include "kassembly/kassembly.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace property_suites {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

namespace detail {

using kassembly::Combination;
using kassembly::FreeGradedAlgebra;
using kassembly::Int;
using kassembly::IntPoly;
using kassembly::Monomial;
using kassembly::Rat;
using kassembly::RationalFunction;
using kassembly::SignedMonomial;
using kassembly::TruncatedSeries;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline IntPoly rand_poly(Rng& rng, int max_degree) {
    std::vector<Int> c(static_cast<std::size_t>(rand_int(rng, 0, max_degree)) + 1);
    for (auto& x : c) x = rand_int(rng, -4, 4);
    return IntPoly(std::move(c));
}

inline IntPoly rand_unit_poly(Rng& rng, int max_degree) {
    IntPoly p = rand_poly(rng, max_degree);
    if (p.constant_term() != 0) return p;
    int c = rand_int(rng, 1, 3) * (rand_int(rng, 0, 1) == 0 ? 1 : -1);
    return p + IntPoly::constant(c);
}

inline RationalFunction rand_rf(Rng& rng) {
    return RationalFunction(rand_poly(rng, 5), rand_unit_poly(rng, 4));
}

inline TruncatedSeries rand_series(Rng& rng, int cutoff) {
    std::vector<Rat> c(static_cast<std::size_t>(cutoff) + 1);
    for (auto& x : c) x = Rat(rand_int(rng, -5, 5), rand_int(rng, 1, 3));
    return TruncatedSeries(cutoff, std::move(c));
}

inline Monomial rand_monomial(Rng& rng, const FreeGradedAlgebra& a, int max_degree) {
    for (;;) {
        std::vector<Monomial> b = a.basis(rand_int(rng, 0, max_degree));
        if (b.empty()) continue;
        return b[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(b.size()) - 1))];
    }
}

inline Combination as_combination(const SignedMonomial& s) {
    Combination c;
    if (!s.is_zero()) c.emplace(s.value, Rat(s.sign));
    return c;
}

inline Combination as_combination(const Monomial& m) {
    Combination c;
    c.emplace(m, Rat(1));
    return c;
}

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void record(bool ok, const std::string& what) {
        ++result_.cases;
        if (!ok) {
            ++result_.failures;
            if (result_.first_failure.empty())
                result_.first_failure = "case " + std::to_string(result_.cases) + ": " + what;
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

} // namespace detail

// Ring laws of truncated series: associativity, commutativity,
// distributivity, subtraction, and division against multiplication.
inline SuiteResult series_ring_laws(unsigned seed, int cases) {
    using namespace detail;
    Rng rng(seed);
    Recorder rec("series ring laws");
    for (int i = 0; i < cases; ++i) {
        TruncatedSeries a = rand_series(rng, 10);
        TruncatedSeries b = rand_series(rng, 10);
        TruncatedSeries c = rand_series(rng, 10);
        bool ok = ((a + b) + c == a + (b + c)) && (a + b == b + a) && (a * b == b * a) &&
                  ((a * b) * c == a * (b * c)) && (a * (b + c) == a * b + a * c) &&
                  ((a - b) + b == a) && (a + (-a) == TruncatedSeries::zero(10));
        if (ok && b.coeff(0) != 0) ok = (a / b) * b == a;
        rec.record(ok, "series laws failed for a case with cutoff 10");
    }
    return rec.take();
}

// expand(·, cutoff) is a ring homomorphism from rational functions to
// truncated series, compatible with division and powers.
inline SuiteResult expand_homomorphism(unsigned seed, int cases) {
    using namespace detail;
    Rng rng(seed);
    Recorder rec("expansion respects the ring structure");
    const int cutoff = 12;
    for (int i = 0; i < cases; ++i) {
        RationalFunction f = rand_rf(rng);
        RationalFunction g = rand_rf(rng);
        TruncatedSeries ef = expand(f, cutoff);
        TruncatedSeries eg = expand(g, cutoff);
        bool ok = (expand(f + g, cutoff) == ef + eg) && (expand(f - g, cutoff) == ef - eg) &&
                  (expand(f * g, cutoff) == ef * eg) && (expand(f.pow(2), cutoff) == ef * ef);
        if (ok && g.numerator().constant_term() != 0) ok = expand(f / g, cutoff) == ef / eg;
        std::ostringstream what;
        what << "f = " << f.to_string() << ", g = " << g.to_string();
        rec.record(ok, what.str());
    }
    return rec.take();
}

// Koszul-signed multiplication: associativity, graded commutativity
// a·b = (-1)^{|a||b|} b·a, and the unit laws, on a mixed-parity algebra.
inline SuiteResult koszul_laws(unsigned seed, int cases) {
    using namespace detail;
    using kassembly::GeneratorSpec;
    Rng rng(seed);
    Recorder rec("Koszul sign laws");
    FreeGradedAlgebra alg({GeneratorSpec{"x", 2}, GeneratorSpec{"e", 3}, GeneratorSpec{"y", 4},
                           GeneratorSpec{"f", 5}});
    for (int i = 0; i < cases; ++i) {
        Monomial a = rand_monomial(rng, alg, 12);
        Monomial b = rand_monomial(rng, alg, 12);
        Monomial c = rand_monomial(rng, alg, 12);

        Combination ab_c = alg.multiply(as_combination(alg.multiply(a, b)), c);
        Combination a_bc = alg.multiply(a, as_combination(alg.multiply(b, c)));
        bool ok = ab_c == a_bc;

        SignedMonomial ab = alg.multiply(a, b);
        SignedMonomial ba = alg.multiply(b, a);
        int koszul = (a.degree() % 2 != 0 && b.degree() % 2 != 0) ? -1 : 1;
        if (ab.is_zero() || ba.is_zero())
            ok = ok && ab.is_zero() && ba.is_zero();
        else
            ok = ok && ab.value == ba.value && ab.sign == koszul * ba.sign;

        SignedMonomial ua = alg.multiply(alg.unit(), a);
        SignedMonomial au = alg.multiply(a, alg.unit());
        ok = ok && ua.sign == 1 && ua.value == a && au.sign == 1 && au.value == a;

        std::ostringstream what;
        what << alg.format(a) << ", " << alg.format(b) << ", " << alg.format(c);
        rec.record(ok, what.str());
    }
    return rec.take();
}

// Graded Leibniz rule D(ab) = D(a)b + (-1)^{|a|·s} a·D(b) for derivations of
// odd shift (the Connes operator of a model) and of even shift, plus D² = 0
// for the Connes operator.
inline SuiteResult leibniz_rule(unsigned seed, int cases) {
    using namespace detail;
    using kassembly::Derivation;
    using kassembly::GeneratorSpec;
    using kassembly::hh_model;
    Rng rng(seed);
    Recorder rec("graded Leibniz rule");

    kassembly::HHModel model =
        hh_model(FreeGradedAlgebra({GeneratorSpec{"x", 2}, GeneratorSpec{"y", 4}}));
    const FreeGradedAlgebra& alg = model.hh;
    const Derivation& B = model.connes;

    // Even-shift companion on the base: x -> y, y -> x^3 (shift 2).
    const FreeGradedAlgebra& base = model.base;
    Derivation even(base, {as_combination(base.make_monomial({0, 1})),
                           as_combination(base.make_monomial({3, 0}))});

    for (int i = 0; i < cases; ++i) {
        Monomial a = rand_monomial(rng, alg, 12);
        Monomial b = rand_monomial(rng, alg, 12);
        Combination lhs = B.apply(as_combination(alg.multiply(a, b)));
        Combination rhs = alg.multiply(B.apply(a), as_combination(b));
        Rat sgn = a.degree() % 2 != 0 ? Rat(-1) : Rat(1);
        for (const auto& [m, coeff] : alg.multiply(as_combination(a), B.apply(b)))
            kassembly::add_term(rhs, m, sgn * coeff);
        bool ok = lhs == rhs && B.apply(B.apply(a)).empty();

        Monomial p = rand_monomial(rng, base, 12);
        Monomial q = rand_monomial(rng, base, 12);
        Combination lhs2 = even.apply(as_combination(base.multiply(p, q)));
        Combination rhs2 = base.multiply(even.apply(p), as_combination(q));
        for (const auto& [m, coeff] : base.multiply(as_combination(p), even.apply(q)))
            kassembly::add_term(rhs2, m, coeff);
        ok = ok && lhs2 == rhs2;

        std::ostringstream what;
        what << alg.format(a) << " · " << alg.format(b) << " / " << base.format(p) << " · "
             << base.format(q);
        rec.record(ok, what.str());
    }
    return rec.take();
}

// Alternating-sum identity and the kernel closed form across every preset,
// at several cutoffs.
inline SuiteResult euler_identity_sweep() {
    using namespace detail;
    using kassembly::build_hh_model;
    using kassembly::hh_series;
    using kassembly::kernel_series;
    using kassembly::preset_descriptor;
    Recorder rec("alternating-sum identity across presets");
    std::vector<kassembly::SpectrumDescriptor> presets = {
        preset_descriptor("ku"),  preset_descriptor("ko"),  preset_descriptor("ell", 3),
        preset_descriptor("ell", 5), preset_descriptor("mu"), preset_descriptor("mso"),
        preset_descriptor("msp"),
    };
    for (const auto& preset : presets) {
        for (int cutoff : {6, 10, 14}) {
            kassembly::HHModel model = build_hh_model(preset, cutoff);
            std::string why;
            bool ok = kassembly::detail::euler_identity_holds(model, cutoff, &why);
            ok = ok && kernel_series(model, cutoff) ==
                           kassembly::detail::kernel_closed_form(hh_series(model, cutoff));
            rec.record(ok, preset.name + " at cutoff " + std::to_string(cutoff) + ": " + why);
        }
    }
    return rec.take();
}

inline std::vector<SuiteResult> run_all() {
    return {
        series_ring_laws(20240801u, 300),
        expand_homomorphism(20240802u, 250),
        koszul_laws(20240803u, 300),
        leibniz_rule(20240804u, 200),
        euler_identity_sweep(),
    };
}

inline int total_cases(const std::vector<SuiteResult>& suites) {
    int total = 0;
    for (const auto& s : suites) total += s.cases;
    return total;
}

} // namespace property_suites
