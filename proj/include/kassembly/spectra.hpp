#pragma once

#include "kassembly/errors.hpp"
#include "kassembly/graded_algebra.hpp"
#include "kassembly/hochschild.hpp"
#include "kassembly/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kassembly {

// Infinite generator family: member k is named prefix+k and has degree
// degree_step * k (e.g. b_k in degree 2k, q_k in degree 4k).
struct GeneratorFamily {
    std::string prefix;
    int degree_step = 2;
};

// Rational shape of a connective ring spectrum for K-theory assembly:
// the positive-degree homotopy generators (finite list plus families), the
// K-theory series of pi_0 when it has finite type, and preset-level flags.
struct SpectrumDescriptor {
    std::string name;
    std::vector<GeneratorSpec> generators;
    std::vector<GeneratorFamily> families;
    std::optional<RationalFunction> base_k; // K-theory series of pi_0
    std::string base_name;                  // e.g. "Z", "Z_(p)"
    bool has_finite_type_k1 = true;         // K_1(pi_0) finitely generated rationally
    bool periodic_form_known = false;       // localization to the periodic spectrum available

    void validate() const {
        for (const auto& g : generators) {
            if (g.degree < 2 || g.degree % 2 != 0)
                throw invalid_descriptor("descriptor '" + name + "': generator '" + g.name +
                                         "' must have even degree >= 2, got " +
                                         std::to_string(g.degree));
        }
        for (const auto& f : families) {
            if (f.degree_step < 2 || f.degree_step % 2 != 0)
                throw invalid_descriptor("descriptor '" + name + "': family '" + f.prefix +
                                         "' must have even degree step >= 2");
        }
    }
};

namespace detail {

inline bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Borel: the K-theory series of the integers.
inline RationalFunction borel_k_of_z() {
    return RationalFunction(IntPoly::constant(1), IntPoly::constant(1)) +
           RationalFunction(IntPoly::monomial(1, 5), IntPoly::constant(1) - IntPoly::monomial(1, 4));
}

} // namespace detail

// Built-in descriptors: ku, ko, ell (with odd prime p), mu, mso, msp.
inline SpectrumDescriptor preset_descriptor(const std::string& name, std::optional<int> p = std::nullopt) {
    SpectrumDescriptor s;
    s.name = name;
    if (name == "ku") {
        s.generators = {GeneratorSpec{"u", 2}};
        s.base_k = detail::borel_k_of_z();
        s.base_name = "Z";
        s.periodic_form_known = true;
    } else if (name == "ko") {
        s.generators = {GeneratorSpec{"alpha", 4}};
        s.base_k = detail::borel_k_of_z();
        s.base_name = "Z";
        s.periodic_form_known = false;
    } else if (name == "ell") {
        int prime = p.value_or(3);
        if (!detail::is_odd_prime(prime))
            throw invalid_descriptor("ell preset needs an odd prime, got " + std::to_string(prime));
        s.name = "ell(" + std::to_string(prime) + ")";
        s.generators = {GeneratorSpec{"v1", 2 * prime - 2}};
        s.base_name = "Z_(" + std::to_string(prime) + ")";
        s.has_finite_type_k1 = false;
        s.periodic_form_known = true;
    } else if (name == "mu") {
        s.families = {GeneratorFamily{"b", 2}};
        s.base_k = detail::borel_k_of_z();
        s.base_name = "Z";
    } else if (name == "mso" || name == "msp") {
        s.families = {GeneratorFamily{"q", 4}};
        s.base_k = detail::borel_k_of_z();
        s.base_name = "Z";
    } else {
        throw invalid_descriptor("unknown preset '" + name + "' (expected ku, ko, ell, mu, mso, msp)");
    }
    s.validate();
    return s;
}

// Homotopy algebra pi_* ⊗ Q on the descriptor's generators, instantiating
// family members of degree <= cutoff + 1; higher members cannot appear in
// any monomial of degree <= cutoff + 1.
inline FreeGradedAlgebra homotopy_algebra(const SpectrumDescriptor& s, int cutoff) {
    s.validate();
    std::vector<GeneratorSpec> gens = s.generators;
    for (const auto& f : s.families)
        for (int k = 1; f.degree_step * k <= cutoff + 1; ++k)
            gens.push_back(GeneratorSpec{f.prefix + std::to_string(k), f.degree_step * k});
    return FreeGradedAlgebra(std::move(gens));
}

// Hochschild model of the homotopy algebra; truncated-family models record
// the degree window their bases are complete in.
inline HHModel build_hh_model(const SpectrumDescriptor& s, int cutoff) {
    FreeGradedAlgebra base = homotopy_algebra(s, cutoff);
    std::optional<int> valid_through;
    if (!s.families.empty()) valid_through = cutoff + 1;
    return hh_model(base, valid_through);
}

// Series of the K-theory relative to pi_0, computed as the positive-degree
// kernel dimensions of the Connes operator on the Hochschild model — by
// nullspace ranks, not by formula substitution.
inline TruncatedSeries relative_k_series(const SpectrumDescriptor& s, int cutoff) {
    return positive_kernel_series(build_hh_model(s, cutoff), cutoff);
}

struct KSeriesReport {
    std::string name;
    int cutoff = 0;
    TruncatedSeries base;
    TruncatedSeries relative;
    TruncatedSeries total; // base + relative, coefficientwise
    std::vector<std::string> notes;
};

// Absolute K-theory series: K of pi_0 plus the relative part (the fiber
// sequence splits rationally). Refused when K_1 of pi_0 is not finitely
// generated rationally, since no finite base series exists.
inline KSeriesReport k_series(const SpectrumDescriptor& s, int cutoff) {
    s.validate();
    if (!s.has_finite_type_k1 || !s.base_k)
        throw unsupported_request(
            "preset '" + s.name + "': K_1(" + s.base_name +
            ") is not finitely generated rationally, so the absolute series has no finite form; "
            "use the relative series instead");
    KSeriesReport rep{s.name,
                      cutoff,
                      expand(*s.base_k, cutoff),
                      relative_k_series(s, cutoff),
                      TruncatedSeries(cutoff),
                      {}};
    rep.total = rep.base + rep.relative;
    rep.notes.push_back("base: K-theory series of " + s.base_name);
    rep.notes.push_back("relative: positive-degree kernel of the Connes operator");
    return rep;
}

// Series of K of the periodic localization. For ku this is
// K(ku) + t·K(Z): the boundary to the delooped base K-theory splits
// rationally, and delooping shifts the series by one degree. For ell the
// same mechanism applies, but both K(Z_(p)) summands (direct and delooped)
// lack finite type and are omitted: the result is the doubly relative
// series. Other presets are refused.
inline TruncatedSeries k_periodic_series(const SpectrumDescriptor& s, int cutoff) {
    s.validate();
    if (!s.periodic_form_known) {
        if (s.name == "ko")
            throw unsupported_request(
                "preset 'ko': no rational computation of the periodic form is available; "
                "the conjugation-fixed-points variant is the closest known answer");
        throw unsupported_request("preset '" + s.name + "': periodic form not available");
    }
    TruncatedSeries relative = relative_k_series(s, cutoff);
    if (!s.has_finite_type_k1 || !s.base_k) return relative;
    KSeriesReport base_rep = k_series(s, cutoff);
    TruncatedSeries shifted_base = TruncatedSeries::monomial(1, cutoff) * expand(*s.base_k, cutoff);
    return base_rep.total + shifted_base;
}

struct AnnotatedSeries {
    TruncatedSeries series;
    std::string annotation;
};

// Conjugation-fixed-points series of the periodic complex form: complex
// conjugation fixes the K(Z) summands and the alpha-generated part of the
// relative term, giving (1+t) + (2t^5+t^6)/(1-t^4). Offered for the ku and
// ko presets.
inline AnnotatedSeries k_fixed_points_series(const SpectrumDescriptor& s, int cutoff) {
    s.validate();
    if (s.name != "ku" && s.name != "ko")
        throw unsupported_request("fixed-points variant is defined for the ku and ko presets only");
    SpectrumDescriptor ko = preset_descriptor("ko");
    KSeriesReport base_rep = k_series(ko, cutoff);
    TruncatedSeries shifted_base = TruncatedSeries::monomial(1, cutoff) * expand(*ko.base_k, cutoff);
    return AnnotatedSeries{base_rep.total + shifted_base,
                           "plausibility, not theorem: models the homotopy fixed points of "
                           "conjugation, conjecturally close to the periodic real form"};
}

// 1 + t^5/(1-t^4) + t^{2n+1}/(1-t^{2n}), the common series of the
// n-sphere-parametrized A-theory family; n = 1 matches k_series(ku) and
// n = 2 matches k_series(ko).
inline TruncatedSeries a_theory_sphere_series(int n, int cutoff) {
    if (n < 1) throw std::invalid_argument("a_theory_sphere_series: need n >= 1");
    RationalFunction f = detail::borel_k_of_z() +
                         RationalFunction(IntPoly::monomial(1, 2 * n + 1),
                                          IntPoly::constant(1) - IntPoly::monomial(1, 2 * n));
    return expand(f, cutoff);
}

struct UnitMapReport {
    std::string name;
    int cutoff = 0;
    TruncatedSeries bsl1;     // t · (homotopy series - 1)
    TruncatedSeries relative; // relative K-theory series
    std::optional<int> first_difference;
};

// Compares the series through which the unit-map source BSL_1 enters against
// the relative K-theory series; equal series mean the rational comparison
// map can be an equivalence, a first difference pins the degree where it
// fails to be one.
inline UnitMapReport unit_map_comparison(const SpectrumDescriptor& s, int cutoff) {
    HHModel model = build_hh_model(s, cutoff);
    TruncatedSeries homotopy = model.base.poincare_series(cutoff);
    TruncatedSeries bsl1 =
        TruncatedSeries::monomial(1, cutoff) * (homotopy - TruncatedSeries::one(cutoff));
    TruncatedSeries relative = positive_kernel_series(model, cutoff);
    return UnitMapReport{s.name, cutoff, bsl1, relative, first_difference_degree(bsl1, relative)};
}

} // namespace kassembly
