#include <doctest.h>

#include <cmath>

#include "biasgauge/dependence.hpp"
#include "biasgauge/error.hpp"

#include "error_matchers.hpp"
#include "known_answers.hpp"
#include "support.hpp"

using namespace biasgauge;

TEST_CASE("toy 2x2 table reproduces the hand-computed statistics") {
    // Counts [[10,20],[30,40]]: row totals 30/70, column totals 40/60, n=100.
    const ContingencyTable table = contingency_from_counts({{{10, 20}}, {{30, 40}}});

    CHECK(table.n == 100);
    CHECK(table.row_totals == std::vector<std::int64_t>{30, 70});
    CHECK(table.col_totals == std::array<std::int64_t, 2>{{40, 60}});
    // Expected frequencies are exact small rationals, so bitwise equality.
    for (std::size_t i = 0; i < 4; ++i) CHECK(table.expected[i] == known::kToyExpected[i]);

    const double chi = chi_square(table);
    CHECK(chi == doctest::Approx(known::kToyChiSquare).epsilon(1e-12)); // 50/63 by hand

    const double w = effect_size_w(table);
    CHECK(w == doctest::Approx(std::sqrt(chi / 100.0)).epsilon(1e-12));
    CHECK(classify_magnitude(w) == EffectMagnitude::VerySmall);

    const double c = contingency_coefficient(chi, table.n);
    // The coefficient and the effect size satisfy C = sqrt(w^2 / (w^2 + 1)).
    CHECK(c == doctest::Approx(std::sqrt(w * w / (w * w + 1.0))).epsilon(1e-12));
}

TEST_CASE("contingency coefficient boundary behaviour") {
    CHECK(contingency_coefficient(0.0, 50) == 0.0);
    // chi-square equal to n lands exactly on sqrt(1/2).
    CHECK(contingency_coefficient(50.0, 50) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(contingency_coefficient(1e12, 10) < 1.0);
    CHECK_RAISES(ErrorCode::InvalidArgument, contingency_coefficient(1.0, 0));
    CHECK_RAISES(ErrorCode::InvalidArgument, contingency_coefficient(-0.5, 10));
}

TEST_CASE("magnitude bins have closed lower bounds") {
    CHECK(classify_magnitude(0.0) == EffectMagnitude::VerySmall);
    CHECK(classify_magnitude(0.0999999) == EffectMagnitude::VerySmall);
    CHECK(classify_magnitude(0.1) == EffectMagnitude::Small);
    CHECK(classify_magnitude(0.2999999) == EffectMagnitude::Small);
    CHECK(classify_magnitude(0.3) == EffectMagnitude::Medium);
    CHECK(classify_magnitude(0.4999999) == EffectMagnitude::Medium);
    CHECK(classify_magnitude(0.5) == EffectMagnitude::Large);
    CHECK(classify_magnitude(3.0) == EffectMagnitude::Large);
    CHECK_RAISES(ErrorCode::InvalidArgument, classify_magnitude(-0.01));

    CHECK(to_string(EffectMagnitude::VerySmall) == std::string("VERY SMALL"));
    CHECK(to_string(EffectMagnitude::Small) == std::string("SMALL"));
    CHECK(to_string(EffectMagnitude::Medium) == std::string("MEDIUM"));
    CHECK(to_string(EffectMagnitude::Large) == std::string("LARGE"));
}

TEST_CASE("row-built and count-built tables agree") {
    const std::vector<known::CountRow> counts = {{"a", {10, 20}}, {"b", {30, 40}}};
    const ContingencyTable from_rows =
        build_contingency(testsupport::make_dataset(counts));
    const ContingencyTable from_counts = contingency_from_counts({{{10, 20}}, {{30, 40}}});
    CHECK(from_rows.observed == from_counts.observed);
    CHECK(from_rows.expected == from_counts.expected);
    CHECK(chi_square(from_rows) == chi_square(from_counts));
}

TEST_CASE("degenerate marginals are rejected with the dedicated code") {
    // A protected level with zero rows.
    CHECK_RAISES(ErrorCode::DegenerateMarginal,
                 contingency_from_counts({{{10, 20}}, {{0, 0}}}));
    // A target column with zero rows.
    CHECK_RAISES(ErrorCode::DegenerateMarginal,
                 contingency_from_counts({{{10, 0}}, {{20, 0}}}));
    // No levels at all.
    CHECK_RAISES(ErrorCode::DegenerateMarginal, contingency_from_counts({}));
    // Negative counts are a caller bug, not degeneracy.
    CHECK_RAISES(ErrorCode::InvalidArgument, contingency_from_counts({{{-1, 2}}}));
}

TEST_CASE("independent-by-construction tables score exactly zero") {
    // Outer product of (1,2,3) x (2,3): every expected equals its observed.
    const ContingencyTable table =
        contingency_from_counts({{{2, 3}}, {{4, 6}}, {{6, 9}}});
    CHECK(chi_square(table) == 0.0);
    CHECK(effect_size_w(table) == 0.0);
    CHECK(contingency_coefficient(0.0, table.n) == 0.0);
}

TEST_CASE("replicating every row k times scales chi-square linearly, w not at all") {
    const ContingencyTable base = contingency_from_counts({{{12, 5}}, {{3, 30}}, {{8, 8}}});
    const ContingencyTable tripled = contingency_from_counts({{{36, 15}}, {{9, 90}}, {{24, 24}}});
    CHECK(chi_square(tripled) == doctest::Approx(3.0 * chi_square(base)).epsilon(1e-12));
    CHECK(effect_size_w(tripled) == doctest::Approx(effect_size_w(base)).epsilon(1e-12));
}

TEST_CASE("summary bundles the four statistics consistently") {
    const ContingencyTable table = contingency_from_counts({{{50, 10}}, {{10, 50}}});
    const DependenceSummary summary = summarize_dependence(table);
    CHECK(summary.chi_square == chi_square(table));
    CHECK(summary.effect_size_w == effect_size_w(table));
    CHECK(summary.contingency_coefficient == contingency_coefficient(summary.chi_square, table.n));
    CHECK(summary.magnitude == classify_magnitude(summary.effect_size_w));
    // (50-30)^2/30 * 4 cells = 53.33; w = sqrt(53.33/120) = 0.667 -> LARGE.
    CHECK(summary.magnitude == EffectMagnitude::Large);
}
