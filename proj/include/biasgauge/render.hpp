#pragma once

#include <array>
#include <string>
#include <vector>

#include "biasgauge/annotation.hpp"

namespace biasgauge {

struct Badge {
    std::string filename; // e.g. "compas_dependence.svg"
    std::string svg;
};

// The four per-document badges. Every numeric string in a badge's text layer
// is a value rendered in the serialized document; generation is fully
// deterministic (no timestamps, no randomness).
struct BadgeSet {
    Badge dependence;
    Badge diverseness;
    Badge inclusiveness;
    Badge likelihood;

    std::array<const Badge*, 4> all() const {
        return {&dependence, &diverseness, &inclusiveness, &likelihood};
    }
};

BadgeSet render_badges(const AnnotationDocument& document);

// Writes the four badges into `dir` (created if needed); returns the paths
// written, in BadgeSet order.
std::vector<std::string> write_badges(const BadgeSet& badges, const std::string& dir);

// Filename-safe form of a dataset name: [A-Za-z0-9._-], everything else '-'.
std::string sanitize_name(const std::string& name);

}  // namespace biasgauge
