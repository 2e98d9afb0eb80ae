#pragma once

#include "kassembly/hochschild.hpp"
#include "kassembly/series.hpp"
#include "kassembly/spectra.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace kassembly {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail; // populated on failure
};

struct VerifyReport {
    int cutoff = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

class Verifier {
public:
    explicit Verifier(int cutoff) : cutoff_(cutoff) {}

    void series_eq(const std::string& id, const std::string& description, const TruncatedSeries& got,
                   const TruncatedSeries& expected) {
        CheckResult r{id, description, got == expected, {}};
        if (!r.passed)
            r.detail = "expected " + to_text(expected) + ", got " + to_text(got);
        add(std::move(r));
    }

    void condition(const std::string& id, const std::string& description, bool ok,
                   const std::string& detail_on_failure) {
        add(CheckResult{id, description, ok, ok ? std::string{} : detail_on_failure});
    }

    void add(CheckResult r) {
        // Merge repeated ids: a check with several legs passes when all do.
        for (auto& c : report_.checks) {
            if (c.id == r.id) {
                c.passed = c.passed && r.passed;
                if (!r.detail.empty()) {
                    if (!c.detail.empty()) c.detail += "; ";
                    c.detail += r.detail;
                }
                return;
            }
        }
        report_.checks.push_back(std::move(r));
    }

    VerifyReport take() {
        report_.cutoff = cutoff_;
        return std::move(report_);
    }

private:
    int cutoff_;
    VerifyReport report_;
};

inline TruncatedSeries h_series(int cutoff) {
    return infinite_product(
        [](int k) {
            IntPoly one = IntPoly::constant(1);
            return RationalFunction(one + IntPoly::monomial(1, 2 * k + 1),
                                    one - IntPoly::monomial(1, 2 * k));
        },
        cutoff);
}

inline TruncatedSeries h_so_series(int cutoff) {
    return infinite_product(
        [](int k) {
            IntPoly one = IntPoly::constant(1);
            return RationalFunction(one + IntPoly::monomial(1, 4 * k + 1),
                                    one - IntPoly::monomial(1, 4 * k));
        },
        cutoff);
}

inline TruncatedSeries p_series(int cutoff) {
    return infinite_product(
        [](int k) {
            return RationalFunction(IntPoly::constant(1),
                                    IntPoly::constant(1) - IntPoly::monomial(1, 2 * k));
        },
        cutoff);
}

// (1 + t·h) / (1 + t) at series level.
inline TruncatedSeries kernel_closed_form(const TruncatedSeries& h) {
    int cutoff = h.cutoff();
    TruncatedSeries t = TruncatedSeries::monomial(1, cutoff);
    return (TruncatedSeries::one(cutoff) + t * h) / (TruncatedSeries::one(cutoff) + t);
}

inline bool euler_identity_holds(const HHModel& m, int max_degree, std::string* failure) {
    TruncatedSeries h = hh_series(m, max_degree);
    std::vector<int> ker = kernel_dims(m, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        Rat alternating(0);
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            alternating += Rat(sign) * h.coeff(i);
            sign = -sign;
        }
        Rat lhs = Rat(1) - Rat(n % 2 == 0 ? 1 : -1) * ker[static_cast<std::size_t>(n)];
        if (lhs != alternating) {
            if (failure) {
                std::ostringstream os;
                os << "degree " << n << ": 1 - (-1)^n k_n = " << to_string(lhs)
                   << " but the alternating sum is " << to_string(alternating);
                *failure = os.str();
            }
            return false;
        }
    }
    return true;
}

inline bool derham_point(const std::vector<int>& dims, std::string* failure) {
    for (std::size_t d = 0; d < dims.size(); ++d) {
        int expected = d == 0 ? 1 : 0;
        if (dims[d] != expected) {
            if (failure)
                *failure = "degree " + std::to_string(d) + ": expected " + std::to_string(expected) +
                           ", got " + std::to_string(dims[d]);
            return false;
        }
    }
    return true;
}

} // namespace detail

// Runs the full identity suite at the given cutoff and reports one named
// result per check; every series equality is exact and coefficientwise.
inline VerifyReport verify_all(int cutoff) {
    detail::Verifier v(cutoff);
    const auto rf = [](const char* text) { return parse_rational_function(text); };

    SpectrumDescriptor ku = preset_descriptor("ku");
    SpectrumDescriptor ko = preset_descriptor("ko");
    SpectrumDescriptor ell3 = preset_descriptor("ell", 3);
    SpectrumDescriptor ell5 = preset_descriptor("ell", 5);
    SpectrumDescriptor mu = preset_descriptor("mu");
    SpectrumDescriptor mso = preset_descriptor("mso");
    SpectrumDescriptor msp = preset_descriptor("msp");

    v.series_eq("0.1b", "K(ku) series equals 1 + (t^3 + 2t^5)/(1 - t^4)", k_series(ku, cutoff).total,
                expand(rf("1 + (t^3 + 2t^5)/(1 - t^4)"), cutoff));

    v.series_eq("0.2b", "K(KU) series equals (1+t) + (t^3 + 2t^5 + t^6)/(1 - t^4)",
                k_periodic_series(ku, cutoff), expand(rf("(1+t) + (t^3 + 2t^5 + t^6)/(1 - t^4)"), cutoff));

    v.series_eq("2.5a", "relative K(ku) series equals t^3/(1 - t^2)", relative_k_series(ku, cutoff),
                expand(rf("t^3/(1 - t^2)"), cutoff));

    v.series_eq("2.5b", "relative series: ko and ell(3) give t^5/(1 - t^4), ell(5) gives t^9/(1 - t^8)", relative_k_series(ko, cutoff),
                expand(rf("t^5/(1 - t^4)"), cutoff));
    v.series_eq("2.5b", "relative series: ko and ell(3) give t^5/(1 - t^4), ell(5) gives t^9/(1 - t^8)", relative_k_series(ell3, cutoff),
                expand(rf("t^5/(1 - t^4)"), cutoff));
    v.series_eq("2.5b", "relative series: ko and ell(3) give t^5/(1 - t^4), ell(5) gives t^9/(1 - t^8)", relative_k_series(ell5, cutoff),
                expand(rf("t^9/(1 - t^8)"), cutoff));

    v.series_eq("2.6", "K(ko) equals 1 + 2t^5/(1 - t^4) and the sphere family matches K(ku), K(ko) at n=1,2", k_series(ko, cutoff).total,
                expand(rf("1 + 2t^5/(1 - t^4)"), cutoff));
    v.series_eq("2.6", "K(ko) equals 1 + 2t^5/(1 - t^4) and the sphere family matches K(ku), K(ko) at n=1,2", a_theory_sphere_series(1, cutoff),
                k_series(ku, cutoff).total);
    v.series_eq("2.6", "K(ko) equals 1 + 2t^5/(1 - t^4) and the sphere family matches K(ku), K(ko) at n=1,2", a_theory_sphere_series(2, cutoff),
                k_series(ko, cutoff).total);

    v.series_eq("2.12", "K(KU) minus K(ku) is the degree-shifted K(Z) series",
                k_periodic_series(ku, cutoff) - k_series(ku, cutoff).total,
                TruncatedSeries::monomial(1, cutoff) * expand(rf("1 + t^5/(1 - t^4)"), cutoff));

    {
        AnnotatedSeries fixed = k_fixed_points_series(ku, cutoff);
        v.series_eq("2.13-series", "conjugation fixed-points series equals (1+t) + (2t^5 + t^6)/(1 - t^4), with annotation",
                    fixed.series, expand(rf("(1+t) + (2t^5 + t^6)/(1 - t^4)"), cutoff));
        v.condition("2.13-series", "conjugation fixed-points series equals (1+t) + (2t^5 + t^6)/(1 - t^4), with annotation",
                    fixed.annotation.find("plausibility, not theorem") != std::string::npos,
                    "annotation text missing");
    }

    TruncatedSeries h = detail::h_series(cutoff);
    TruncatedSeries h_so = detail::h_so_series(cutoff);
    HHModel mu_model = build_hh_model(mu, cutoff);
    HHModel mso_model = build_hh_model(mso, cutoff);

    v.series_eq("3.3a", "Hochschild series of the MU model matches the infinite product",
                hh_series(mu_model, cutoff), h);

    {
        std::string why;
        v.condition("3.3b", "de Rham homology of the MU model is concentrated in degree 0",
                    detail::derham_point(derham_dims(mu_model, cutoff), &why), why);
    }

    v.series_eq("3.3c", "MU kernel series equals (1 + t h)/(1 + t) and the alternating-sum identity holds",
                kernel_series(mu_model, cutoff), detail::kernel_closed_form(h));
    {
        std::string why;
        v.condition("3.3c", "MU kernel series equals (1 + t h)/(1 + t) and the alternating-sum identity holds",
                    detail::euler_identity_holds(mu_model, cutoff, &why), why);
    }

    v.series_eq("3.3d", "MSO model: Hochschild series is h_so, kernel series (1 + t h_so)/(1 + t), de Rham point",
                hh_series(mso_model, cutoff), h_so);
    v.series_eq("3.3d", "MSO model: Hochschild series is h_so, kernel series (1 + t h_so)/(1 + t), de Rham point",
                kernel_series(mso_model, cutoff), detail::kernel_closed_form(h_so));
    {
        std::string why;
        v.condition("3.3d", "MSO model: Hochschild series is h_so, kernel series (1 + t h_so)/(1 + t), de Rham point",
                    detail::derham_point(derham_dims(mso_model, cutoff), &why), why);
    }

    {
        TruncatedSeries t = TruncatedSeries::monomial(1, cutoff);
        TruncatedSeries one = TruncatedSeries::one(cutoff);
        v.series_eq("3.4a", "relative K(MU) series equals (t h - t)/(1 + t)", relative_k_series(mu, cutoff),
                    (t * h - t) / (one + t));
        TruncatedSeries so_expected = (t * h_so - t) / (one + t);
        v.series_eq("3.4b", "relative series of MSO and MSp both equal (t h_so - t)/(1 + t)",
                    relative_k_series(mso, cutoff), so_expected);
        v.series_eq("3.4b", "relative series of MSO and MSp both equal (t h_so - t)/(1 + t)", relative_k_series(msp, cutoff),
                    so_expected);
        v.series_eq("3.5", "K(MU) series equals t^5/(1 - t^4) + (1 + t h)/(1 + t)",
                    k_series(mu, cutoff).total,
                    expand(rf("t^5/(1 - t^4)"), cutoff) + (one + t * h) / (one + t));
    }

    for (const SpectrumDescriptor* s : {&ku, &ko, &ell3}) {
        UnitMapReport rep = unit_map_comparison(*s, cutoff);
        v.condition("4.8",
                    "unit-map series agree for ku, ko, ell(3) (no first difference)",
                    !rep.first_difference.has_value(),
                    "first difference at degree " +
                        (rep.first_difference ? std::to_string(*rep.first_difference) : std::string("-")));
    }

    {
        UnitMapReport rep = unit_map_comparison(mu, cutoff);
        TruncatedSeries p = detail::p_series(cutoff);
        v.series_eq("4.9", "MU unit-map series: t(p - 1) vs (t h - t)/(1 + t), first difference in degree 8", rep.bsl1,
                    TruncatedSeries::monomial(1, cutoff) * (p - TruncatedSeries::one(cutoff)));
        std::optional<int> expected_diff;
        if (cutoff >= 8) expected_diff = 8;
        v.condition("4.9", "MU unit-map series: t(p - 1) vs (t h - t)/(1 + t), first difference in degree 8",
                    rep.first_difference == expected_diff,
                    "first difference at degree " +
                        (rep.first_difference ? std::to_string(*rep.first_difference) : std::string("-")));
        if (cutoff >= 8) {
            v.condition("4.9", "MU unit-map series: t(p - 1) vs (t h - t)/(1 + t), first difference in degree 8",
                        rep.bsl1.coeff(8) == 0 && rep.relative.coeff(8) == 1,
                        "coefficients " + to_string(rep.bsl1.coeff(8)) + " and " +
                            to_string(rep.relative.coeff(8)));
        }
    }

    return v.take();
}

inline std::string format_report(const VerifyReport& rep) {
    std::ostringstream os;
    os << "identity suite at cutoff " << rep.cutoff << "\n";
    for (const auto& c : rep.checks) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  " << c.description;
        if (!c.passed && !c.detail.empty()) os << "\n      " << c.detail;
        os << "\n";
    }
    os << (rep.all_passed() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

} // namespace kassembly
