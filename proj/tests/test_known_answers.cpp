#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "biasgauge/annotation.hpp"
#include "biasgauge/dependence.hpp"
#include "biasgauge/format.hpp"
#include "biasgauge/probability.hpp"

#include "known_answers.hpp"
#include "support.hpp"

using namespace biasgauge;

// Reference audits over the three benchmark count tables, checked against
// values frozen from an independent brute-force oracle. These run without
// any data files: the count tables fully determine every statistic.

namespace {

ProbabilityTables tables_for(const known::ReferenceAudit& audit) {
    return probability_tables(testsupport::make_dataset(audit.counts));
}

DependenceSummary dependence_for(const known::ReferenceAudit& audit) {
    return summarize_dependence(build_contingency(testsupport::make_dataset(audit.counts)));
}

std::size_t level_index(const ProbabilityTables& tables, const std::string& level) {
    for (std::size_t a = 0; a < tables.protected_levels.size(); ++a)
        if (tables.protected_levels[a] == level) return a;
    FAIL("level not present: ", level);
    return 0;
}

void check_against_oracle(const known::ReferenceAudit& audit) {
    CAPTURE(audit.name);
    std::int64_t n = 0;
    for (const auto& [_, pair] : audit.counts) n += pair[0] + pair[1];
    REQUIRE(n == audit.n);

    const DependenceSummary summary = dependence_for(audit);
    CHECK(summary.chi_square == doctest::Approx(audit.chi_square).epsilon(1e-9));
    CHECK(summary.contingency_coefficient == doctest::Approx(audit.coefficient).epsilon(1e-9));
    CHECK(summary.effect_size_w == doctest::Approx(audit.effect_size).epsilon(1e-9));
    CHECK(to_string(summary.magnitude) == std::string(audit.magnitude));
}

}  // namespace

TEST_CASE("reference audits reproduce the frozen oracle statistics") {
    check_against_oracle(known::compas());
    check_against_oracle(known::drug_consumption());
    check_against_oracle(known::adult());
}

TEST_CASE("recidivism audit: published 4-decimal statistics") {
    // Within half an ulp of the fourth decimal, i.e. these ARE the values
    // that round to the published figures.
    const auto rounds_to = [](double value, double published) {
        return std::abs(value - published) <= 5e-5;
    };

    const DependenceSummary summary = dependence_for(known::compas());
    CHECK(rounds_to(summary.contingency_coefficient, 0.1413));
    CHECK(rounds_to(summary.effect_size_w, 0.1427));
    CHECK(to_string(summary.magnitude) == std::string("SMALL"));

    const DependenceSummary drug = dependence_for(known::drug_consumption());
    CHECK(rounds_to(drug.contingency_coefficient, 0.1558));

    const DependenceSummary adult = dependence_for(known::adult());
    CHECK(rounds_to(adult.contingency_coefficient, 0.0994));
    CHECK(to_string(adult.magnitude) == std::string("VERY SMALL"));
}

TEST_CASE("recidivism audit: prior probabilities at 3-decimal rendering") {
    const ProbabilityTables tables = tables_for(known::compas());
    CHECK(render_fixed(tables.prior_target[0], 3) == "0.545");
    CHECK(render_fixed(tables.prior_protected[level_index(tables, "African-American")], 3) ==
          "0.514");
    CHECK(render_fixed(tables.prior_protected[level_index(tables, "Caucasian")], 3) == "0.341");
    CHECK(render_fixed(tables.prior_protected[level_index(tables, "Asian")], 3) == "0.005");
    CHECK(render_fixed(tables.prior_protected[level_index(tables, "Native American")], 3) ==
          "0.002");

    const ProbabilityTables adult = tables_for(known::adult());
    CHECK(render_fixed(adult.prior_target[1], 3) == "0.761");
}

TEST_CASE("recidivism audit: joint probabilities are exact count ratios") {
    const ProbabilityTables tables = tables_for(known::compas());
    const std::size_t black = level_index(tables, "African-American");
    CHECK(tables.support[tables.at(black, 1)] == 1661);
    CHECK(tables.joint[tables.at(black, 1)] == 1661.0 / 6172.0);
    CHECK(render_fixed(tables.joint[tables.at(black, 1)], 3) == "0.269");

    // The cannabis audit has a true zero joint: no (Black/Asian, 0) rows.
    const ProbabilityTables drug = tables_for(known::drug_consumption());
    const std::size_t mixed = level_index(drug, "Black/Asian");
    CHECK(drug.support[drug.at(mixed, 0)] == 0);
    CHECK(drug.joint[drug.at(mixed, 0)] == 0.0);
}

TEST_CASE("recidivism audit: training likelihoods at 3-decimal rendering") {
    const ProbabilityTables tables = tables_for(known::compas());
    const std::size_t black = level_index(tables, "African-American");
    const std::size_t caucasian = level_index(tables, "Caucasian");

    const auto value = [](const ProbValue& cell) {
        REQUIRE(cell.defined);
        return cell.value;
    };
    CHECK(render_fixed(value(tables.cond_protected_given_target[tables.at(black, 1)]), 3) ==
          "0.591");
    CHECK(render_fixed(value(tables.cond_protected_given_target[tables.at(caucasian, 1)]), 3) ==
          "0.293");
    CHECK(render_fixed(value(tables.cond_target_given_protected[tables.at(black, 1)]), 3) ==
          "0.523");
    CHECK(render_fixed(value(tables.cond_target_given_protected[tables.at(caucasian, 0)]), 3) ==
          "0.609");
}

TEST_CASE("cannabis audit: the zero-support cell forces a degenerate likelihood") {
    const ProbabilityTables drug = tables_for(known::drug_consumption());
    const std::size_t mixed = level_index(drug, "Black/Asian");
    const ProbValue user_rate = drug.cond_target_given_protected[drug.at(mixed, 1)];
    REQUIRE(user_rate.defined);
    CHECK(user_rate.value == 1.0);

    // The full annotation carries the matching risk flag.
    AuditConfig config;
    config.protected_column = "ethnicity";
    config.target_column = "cannabis";
    const AnnotationDocument document =
        annotate(testsupport::make_dataset(known::drug_consumption().counts), config, {}, "drug");
    bool flagged = false;
    for (const RiskFlag& flag : document.flags) {
        if (flag.kind == FlagKind::ZeroSupport && flag.protected_level == "Black/Asian" &&
            flag.target_level && *flag.target_level == "0")
            flagged = true;
    }
    CHECK(flagged);
}

TEST_CASE("frozen count tables are already in canonical level order") {
    for (const auto* audit :
         {&known::compas(), &known::drug_consumption(), &known::adult()}) {
        const ProbabilityTables tables = tables_for(*audit);
        REQUIRE(tables.protected_levels.size() == audit->counts.size());
        for (std::size_t a = 0; a < audit->counts.size(); ++a)
            CHECK(tables.protected_levels[a] == audit->counts[a].first);
    }
}
