#include "kassembly/spectra.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace kassembly;

namespace {

TruncatedSeries from_ints(int cutoff, std::vector<int> coeffs) {
    std::vector<Rat> r(coeffs.begin(), coeffs.end());
    return TruncatedSeries(cutoff, std::move(r));
}

TruncatedSeries rf(const std::string& text, int cutoff) {
    return expand(parse_rational_function(text), cutoff);
}

} // namespace

TEST_CASE("preset descriptors") {
    SpectrumDescriptor ku = preset_descriptor("ku");
    CHECK(ku.generators.size() == 1);
    CHECK(ku.generators[0].degree == 2);
    CHECK(ku.base_name == "Z");
    CHECK(ku.periodic_form_known);
    CHECK(ku.has_finite_type_k1);

    SpectrumDescriptor ko = preset_descriptor("ko");
    CHECK(ko.generators[0].name == "alpha");
    CHECK(ko.generators[0].degree == 4);
    CHECK_FALSE(ko.periodic_form_known);

    SpectrumDescriptor ell3 = preset_descriptor("ell");
    CHECK(ell3.name == "ell(3)");
    CHECK(ell3.generators[0].degree == 4);
    CHECK(ell3.base_name == "Z_(3)");
    CHECK_FALSE(ell3.has_finite_type_k1);
    CHECK(ell3.periodic_form_known);

    SpectrumDescriptor ell5 = preset_descriptor("ell", 5);
    CHECK(ell5.generators[0].degree == 8);

    CHECK(preset_descriptor("mu").families.size() == 1);
    CHECK(preset_descriptor("mso").families[0].degree_step == 4);
    CHECK(preset_descriptor("msp").families[0].degree_step == 4);

    CHECK_THROWS_AS(preset_descriptor("ell", 2), invalid_descriptor);
    CHECK_THROWS_AS(preset_descriptor("ell", 4), invalid_descriptor);
    CHECK_THROWS_AS(preset_descriptor("ell", 9), invalid_descriptor);
    CHECK_THROWS_AS(preset_descriptor("kq"), invalid_descriptor);
}

TEST_CASE("descriptor validation rejects bad degrees") {
    SpectrumDescriptor bad;
    bad.name = "bad";
    bad.generators = {GeneratorSpec{"u", 3}};
    CHECK_THROWS_AS(bad.validate(), invalid_descriptor);
    CHECK_THROWS_AS(k_series(bad, 6), invalid_descriptor);
    CHECK_THROWS_AS(homotopy_algebra(bad, 6), invalid_descriptor);

    SpectrumDescriptor bad_family;
    bad_family.name = "bad-family";
    bad_family.families = {GeneratorFamily{"b", 3}};
    CHECK_THROWS_AS(bad_family.validate(), invalid_descriptor);
}

TEST_CASE("family truncation instantiates exactly the reachable members") {
    FreeGradedAlgebra mu20 = homotopy_algebra(preset_descriptor("mu"), 20);
    REQUIRE(mu20.generator_count() == 10);
    CHECK(mu20.generator(0).name == "b1");
    CHECK(mu20.generator(9).name == "b10");
    CHECK(mu20.generator(9).degree == 20);

    FreeGradedAlgebra mso20 = homotopy_algebra(preset_descriptor("mso"), 20);
    REQUIRE(mso20.generator_count() == 5);
    CHECK(mso20.generator(4).degree == 20);

    CHECK(!build_hh_model(preset_descriptor("ku"), 10).basis_valid_through.has_value());
    auto window = build_hh_model(preset_descriptor("mu"), 10).basis_valid_through;
    REQUIRE(window.has_value());
    CHECK(*window == 11);
}

TEST_CASE("relative series of the connective presets") {
    CHECK(relative_k_series(preset_descriptor("ku"), 20) == rf("t^3/(1-t^2)", 20));
    CHECK(relative_k_series(preset_descriptor("ko"), 20) == rf("t^5/(1-t^4)", 20));
    CHECK(relative_k_series(preset_descriptor("ell", 3), 20) == rf("t^5/(1-t^4)", 20));
    CHECK(relative_k_series(preset_descriptor("ell", 5), 20) == rf("t^9/(1-t^8)", 20));

    CHECK(relative_k_series(preset_descriptor("mu"), 12) ==
          from_ints(12, {0, 0, 0, 1, 0, 2, 0, 3, 1, 5, 2, 7, 5}));
    CHECK(relative_k_series(preset_descriptor("mso"), 14) ==
          from_ints(14, {0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 3, 1}));
    CHECK(relative_k_series(preset_descriptor("mso"), 17) ==
          relative_k_series(preset_descriptor("msp"), 17));
}

TEST_CASE("absolute series") {
    KSeriesReport ku = k_series(preset_descriptor("ku"), 19);
    CHECK(ku.base == rf("1 + t^5/(1-t^4)", 19));
    CHECK(ku.total == ku.base + ku.relative);
    CHECK(ku.total == from_ints(19, {1, 0, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1}));
    CHECK_FALSE(ku.notes.empty());

    KSeriesReport ko = k_series(preset_descriptor("ko"), 13);
    CHECK(ko.total == rf("1 + t^5/(1-t^4) + t^5/(1-t^4)", 13));
    CHECK(ko.total == from_ints(13, {1, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2}));

    CHECK_THROWS_AS(k_series(preset_descriptor("ell"), 10), unsupported_request);
    CHECK_THROWS_WITH(k_series(preset_descriptor("ell"), 10),
                      Catch::Matchers::ContainsSubstring("relative"));
}

TEST_CASE("periodic series") {
    SpectrumDescriptor ku = preset_descriptor("ku");
    TruncatedSeries per = k_periodic_series(ku, 19);
    CHECK(per == from_ints(19, {1, 1, 0, 1, 0, 2, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1, 0, 2, 1, 1}));
    CHECK(per == k_series(ku, 19).total +
                     TruncatedSeries::monomial(1, 19) * rf("1 + t^5/(1-t^4)", 19));

    CHECK_THROWS_AS(k_periodic_series(preset_descriptor("ko"), 10), unsupported_request);
    CHECK_THROWS_WITH(k_periodic_series(preset_descriptor("ko"), 10),
                      Catch::Matchers::ContainsSubstring("fixed-points"));
    CHECK_THROWS_AS(k_periodic_series(preset_descriptor("mu"), 10), unsupported_request);

    // Periodic localization over a base whose K-theory lacks finite type:
    // only the doubly relative part survives.
    CHECK(k_periodic_series(preset_descriptor("ell", 3), 15) ==
          relative_k_series(preset_descriptor("ell", 3), 15));
}

TEST_CASE("fixed points variant") {
    AnnotatedSeries fixed_ku = k_fixed_points_series(preset_descriptor("ku"), 16);
    AnnotatedSeries fixed_ko = k_fixed_points_series(preset_descriptor("ko"), 16);
    CHECK(fixed_ku.series == rf("1 + t + (2t^5 + t^6)/(1-t^4)", 16));
    CHECK(fixed_ku.series == fixed_ko.series);
    CHECK(fixed_ku.annotation.find("plausibility, not theorem") != std::string::npos);
    CHECK_THROWS_AS(k_fixed_points_series(preset_descriptor("msp"), 10), unsupported_request);
}

TEST_CASE("sphere family series") {
    CHECK(a_theory_sphere_series(1, 18) == k_series(preset_descriptor("ku"), 18).total);
    CHECK(a_theory_sphere_series(2, 18) == k_series(preset_descriptor("ko"), 18).total);
    CHECK(a_theory_sphere_series(3, 12) == from_ints(12, {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0}));
    CHECK_THROWS_AS(a_theory_sphere_series(0, 10), std::invalid_argument);
}

TEST_CASE("unit map comparison") {
    for (const char* name : {"ku", "ko"}) {
        UnitMapReport rep = unit_map_comparison(preset_descriptor(name), 15);
        CHECK(rep.bsl1 == rep.relative);
        CHECK_FALSE(rep.first_difference.has_value());
    }
    {
        UnitMapReport rep = unit_map_comparison(preset_descriptor("ell", 3), 15);
        CHECK_FALSE(rep.first_difference.has_value());
    }
    {
        UnitMapReport rep = unit_map_comparison(preset_descriptor("mu"), 12);
        REQUIRE(rep.first_difference.has_value());
        CHECK(*rep.first_difference == 8);
        CHECK(rep.bsl1 == from_ints(12, {0, 0, 0, 1, 0, 2, 0, 3, 0, 5, 0, 7, 0}));
        CHECK(rep.bsl1.coeff(8) == 0);
        CHECK(rep.relative.coeff(8) == 1);
    }
    {
        // The oriented family agrees longer: the series first part at degree 14.
        UnitMapReport through13 = unit_map_comparison(preset_descriptor("mso"), 13);
        CHECK_FALSE(through13.first_difference.has_value());
        UnitMapReport through14 = unit_map_comparison(preset_descriptor("mso"), 14);
        REQUIRE(through14.first_difference.has_value());
        CHECK(*through14.first_difference == 14);
    }
}
