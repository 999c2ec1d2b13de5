#include <doctest.h>

#include <filesystem>
#include <string>

#include "biasgauge/annotation.hpp"
#include "biasgauge/error.hpp"
#include "biasgauge/render.hpp"

#include "error_matchers.hpp"
#include "support.hpp"

using namespace biasgauge;

namespace {

AuditConfig demo_config() {
    AuditConfig config;
    config.protected_column = "group";
    config.target_column = "outcome";
    return config;
}

AnnotationDocument demo_document(const std::string& name = "demo") {
    const Dataset dataset = testsupport::make_dataset({{"x", {5, 5}}, {"y", {5, 5}}});
    return annotate(dataset, demo_config(), {}, name);
}

void check_faithful(const BadgeSet& badges, const std::string& serialized) {
    for (const Badge* badge : badges.all()) {
        const auto offending = testsupport::unfaithful_tokens(badge->svg, serialized);
        CAPTURE(badge->filename);
        CHECK_MESSAGE(offending.empty(),
                      "text-layer token missing from the report: ",
                      offending.empty() ? "" : offending.front());
    }
}

}  // namespace

TEST_CASE("badges are named stem_section.svg") {
    const BadgeSet badges = render_badges(demo_document());
    CHECK(badges.dependence.filename == "demo_dependence.svg");
    CHECK(badges.diverseness.filename == "demo_diverseness.svg");
    CHECK(badges.inclusiveness.filename == "demo_inclusiveness.svg");
    CHECK(badges.likelihood.filename == "demo_likelihood.svg");
    for (const Badge* badge : badges.all()) {
        CHECK(badge->svg.rfind("<svg ", 0) == 0);
        CHECK(badge->svg.find("</svg>") != std::string::npos);
    }
}

TEST_CASE("badge generation is deterministic") {
    const AnnotationDocument document = demo_document();
    const BadgeSet first = render_badges(document);
    const BadgeSet second = render_badges(document);
    for (std::size_t i = 0; i < 4; ++i) CHECK(first.all()[i]->svg == second.all()[i]->svg);
}

TEST_CASE("every numeric string in a badge text layer appears in the report") {
    SUBCASE("counted document") {
        const Dataset dataset =
            testsupport::make_dataset({{"alpha", {37, 11}}, {"beta", {5, 90}}, {"gamma", {1, 2}}});
        const AnnotationDocument document = annotate(dataset, demo_config(), {}, "faithful");
        check_faithful(render_badges(document), serialize(document));
    }
    SUBCASE("specified-priors document with a warning") {
        const AnnotationDocument document = example_document("motivating");
        check_faithful(render_badges(document), serialize(document));
    }
    SUBCASE("document with undefined cells and no dependence") {
        const Dataset dataset = testsupport::make_dataset({{"a", {0, 2}}, {"b", {0, 3}}});
        const AnnotationDocument document = annotate(dataset, demo_config(), {}, "partial");
        check_faithful(render_badges(document), serialize(document));
    }
}

TEST_CASE("undefined cells are hatched and labelled, never shown as numbers") {
    const Dataset dataset = testsupport::make_dataset({{"a", {0, 2}}, {"b", {0, 3}}});
    const AnnotationDocument document = annotate(dataset, demo_config(), {}, "hatch");
    const BadgeSet badges = render_badges(document);

    CHECK(badges.likelihood.svg.find("url(#hatch)") != std::string::npos);
    CHECK(badges.likelihood.svg.find(">undefined</text>") != std::string::npos);
    // The dependence badge reports the missing statistic rather than a value.
    CHECK(badges.dependence.svg.find("not computable") != std::string::npos);
    CHECK(badges.dependence.svg.find("effect size gauge") == std::string::npos);
}

TEST_CASE("equiprobable levels draw equal bars") {
    const BadgeSet badges = render_badges(demo_document());
    // Two target bars and two protected bars, all at probability 0.5 over a
    // 180px scale.
    std::size_t count = 0, cursor = 0;
    while ((cursor = badges.diverseness.svg.find("width=\"90\"", cursor)) != std::string::npos) {
        ++count;
        cursor += 1;
    }
    CHECK(count == 4);
    // And all four value labels read the same.
    std::size_t labels = 0;
    for (const std::string& node : testsupport::svg_text_nodes(badges.diverseness.svg))
        if (node == "0.500") ++labels;
    CHECK(labels == 4);
}

TEST_CASE("dependence badge shows the magnitude verdict and gauge") {
    const Dataset dataset = testsupport::make_dataset({{"a", {50, 10}}, {"b", {10, 50}}});
    const AnnotationDocument document = annotate(dataset, demo_config(), {}, "strong");
    const BadgeSet badges = render_badges(document);
    CHECK(badges.dependence.svg.find(">LARGE</text>") != std::string::npos);
    CHECK(badges.dependence.svg.find("effect size gauge") != std::string::npos);
    CHECK(badges.dependence.svg.find("chi-square ") != std::string::npos);
}

TEST_CASE("file names sanitize to a safe character set") {
    CHECK(sanitize_name("data set/v2") == "data-set-v2");
    CHECK(sanitize_name("Simple_name-1.0") == "Simple_name-1.0");
    CHECK(sanitize_name("") == "report");
    CHECK(sanitize_name("///") == "---");

    const BadgeSet badges = render_badges(demo_document("my data"));
    CHECK(badges.dependence.filename == "my-data_dependence.svg");
}

TEST_CASE("write_badges persists all four files and reports their paths") {
    testsupport::TempDir dir;
    const BadgeSet badges = render_badges(demo_document());
    const std::string out = (dir.path() / "badges").string();
    const auto paths = write_badges(badges, out);

    REQUIRE(paths.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::filesystem::exists(paths[i]));
        CHECK(testsupport::read_file(paths[i]) == badges.all()[i]->svg);
        CHECK(std::filesystem::path(paths[i]).filename().string() == badges.all()[i]->filename);
    }

    SUBCASE("an unwritable destination raises IoError") {
        const std::string blocker = dir.write("blocker", "plain file");
        CHECK_RAISES(ErrorCode::IoError, write_badges(badges, blocker + "/nested"));
    }
}
