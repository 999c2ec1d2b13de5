#include "biasgauge/probability.hpp"

#include <algorithm>
#include <cmath>

#include "biasgauge/error.hpp"
#include "biasgauge/format.hpp"

namespace biasgauge {

const char* to_string(FlagKind kind) noexcept {
    switch (kind) {
        case FlagKind::ZeroSupport: return "zero-support";
        case FlagKind::LowPrior: return "low-prior";
        case FlagKind::HighSkew: return "high-skew";
    }
    return "zero-support";
}

namespace {

// The single counting pass every probability is derived from. Each value is
// an exact integer ratio divided once, so an independent brute-force count
// reproduces it bit-for-bit.
struct Counts {
    std::vector<std::int64_t> pair;       // r*2
    std::vector<std::int64_t> protected_; // r
    std::array<std::int64_t, 2> target{};
    std::int64_t n = 0;
};

Counts count_dataset(const Dataset& dataset) {
    Counts counts;
    counts.pair.assign(dataset.level_count() * 2, 0);
    counts.protected_.assign(dataset.level_count(), 0);
    for (const auto& cell : dataset.cells) {
        ++counts.pair[cell.protected_index * 2 + cell.target_index];
        ++counts.protected_[cell.protected_index];
        ++counts.target[cell.target_index];
        ++counts.n;
    }
    return counts;
}

}  // namespace

ProbabilityTables probability_tables(const Dataset& dataset) {
    if (dataset.n_rows == 0)
        raise(ErrorCode::EmptyAfterFiltering, "cannot compute probabilities over zero rows");
    const Counts counts = count_dataset(dataset);
    const std::size_t r = dataset.level_count();
    const double n = double(counts.n);

    ProbabilityTables tables;
    tables.protected_levels = dataset.protected_levels;
    tables.target_levels = dataset.target_levels;
    tables.support = counts.pair;
    tables.protected_counts = counts.protected_;
    tables.target_counts = counts.target;
    tables.n = counts.n;
    tables.has_counts = true;

    for (std::size_t t = 0; t < 2; ++t) tables.prior_target[t] = double(counts.target[t]) / n;
    tables.prior_protected.resize(r);
    for (std::size_t a = 0; a < r; ++a)
        tables.prior_protected[a] = double(counts.protected_[a]) / n;

    tables.joint.resize(r * 2);
    tables.cond_target_given_protected.resize(r * 2);
    tables.cond_protected_given_target.resize(r * 2);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t t = 0; t < 2; ++t) {
            const std::size_t i = tables.at(a, t);
            const std::int64_t pair = counts.pair[i];
            tables.joint[i] = double(pair) / n;
            // Conditionals are count ratios, not ratios of already-divided
            // doubles: P(y|a) = pair/protected and P(a|y) = pair/target.
            tables.cond_target_given_protected[i] =
                counts.protected_[a] > 0
                    ? ProbValue{double(pair) / double(counts.protected_[a]), true}
                    : ProbValue::undefined();
            tables.cond_protected_given_target[i] =
                counts.target[t] > 0 ? ProbValue{double(pair) / double(counts.target[t]), true}
                                     : ProbValue::undefined();
        }
    }
    return tables;
}

PriorVectors priors(const Dataset& dataset) {
    const ProbabilityTables tables = probability_tables(dataset);
    return {tables.prior_target, tables.prior_protected};
}

std::vector<double> joints(const Dataset& dataset) {
    return probability_tables(dataset).joint;
}

ConditionalMatrices posteriors(const Dataset& dataset) {
    ProbabilityTables tables = probability_tables(dataset);
    return {std::move(tables.cond_target_given_protected),
            std::move(tables.cond_protected_given_target)};
}

ProbabilityTables from_specified_priors(const std::vector<std::string>& levels,
                                        const std::vector<double>& prior_protected,
                                        const std::vector<std::array<double, 2>>& cond_target_given_protected) {
    const std::size_t r = levels.size();
    if (prior_protected.size() != r || cond_target_given_protected.size() != r)
        raise(ErrorCode::InvalidArgument,
              "levels, priors and conditional rows must have matching lengths");

    for (std::size_t a = 0; a < r; ++a) {
        if (prior_protected[a] < 0.0)
            raise(ErrorCode::NegativeProbability,
                  "prior for level \"" + levels[a] + "\" is negative");
        for (std::size_t t = 0; t < 2; ++t) {
            if (cond_target_given_protected[a][t] < 0.0)
                raise(ErrorCode::NegativeProbability,
                      "conditional P(target=" + std::to_string(t) + " | " + levels[a] +
                          ") is negative");
        }
        const double row_sum = cond_target_given_protected[a][0] + cond_target_given_protected[a][1];
        if (std::abs(row_sum - 1.0) > 1e-9)
            raise(ErrorCode::RowNotNormalized,
                  "conditional row for level \"" + levels[a] + "\" sums to " +
                      std::to_string(row_sum) + ", expected 1");
    }

    double raw_sum = 0.0;
    for (const double p : prior_protected) raw_sum += p;
    if (raw_sum <= 0.0)
        raise(ErrorCode::RowNotNormalized, "prior vector sums to 0 and cannot be normalized");

    // Canonical level order, consistent with datasets built from files.
    std::vector<std::size_t> order(r);
    for (std::size_t i = 0; i < r; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t lhs, std::size_t rhs) { return levels[lhs] < levels[rhs]; });
    for (std::size_t i = 1; i < r; ++i) {
        if (levels[order[i - 1]] == levels[order[i]])
            raise(ErrorCode::InvalidArgument,
                  "duplicate protected level \"" + levels[order[i]] + "\"");
    }

    ProbabilityTables tables;
    tables.has_counts = false;
    tables.protected_levels.reserve(r);
    for (const std::size_t src : order) tables.protected_levels.push_back(levels[src]);

    // Joints stay as the raw products of the given numbers so the specified
    // inputs are reproduced verbatim; the prior vectors are normalized (the
    // partition guarantee on outputs) with a warning recording the raw sum.
    tables.joint.resize(r * 2);
    tables.cond_target_given_protected.resize(r * 2);
    tables.cond_protected_given_target.resize(r * 2);
    tables.prior_protected.resize(r);
    std::array<double, 2> raw_target{};
    for (std::size_t a = 0; a < r; ++a) {
        const std::size_t src = order[a];
        tables.prior_protected[a] = prior_protected[src] / raw_sum;
        for (std::size_t t = 0; t < 2; ++t) {
            const std::size_t i = tables.at(a, t);
            tables.joint[i] = prior_protected[src] * cond_target_given_protected[src][t];
            tables.cond_target_given_protected[i] = {cond_target_given_protected[src][t], true};
            raw_target[t] += tables.joint[i];
        }
    }
    const double raw_target_total = raw_target[0] + raw_target[1]; // == raw_sum up to rounding
    for (std::size_t t = 0; t < 2; ++t)
        tables.prior_target[t] = raw_target[t] / raw_target_total;

    // Posteriors by total probability over the raw joints; any common scale
    // in the inputs cancels between numerator and denominator.
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t t = 0; t < 2; ++t) {
            const std::size_t i = tables.at(a, t);
            tables.cond_protected_given_target[i] =
                raw_target[t] > 0.0 ? ProbValue{tables.joint[i] / raw_target[t], true}
                                    : ProbValue::undefined();
        }
    }

    if (std::abs(raw_sum - 1.0) > 1e-9) {
        NormalizationWarning warning;
        warning.raw_sum = raw_sum;
        warning.message = "specified priors sum to " + render_fixed(raw_sum, 3) +
                          "; stored prior vectors were normalized to sum to 1";
        tables.normalization_warning = warning;
    }
    return tables;
}

std::vector<RiskFlag> zero_support_flags(const ProbabilityTables& tables,
                                         double low_prior_threshold) {
    std::vector<RiskFlag> flags;
    const std::size_t r = tables.protected_levels.size();
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t t = 0; t < 2; ++t) {
            const std::size_t i = tables.at(a, t);
            const bool zero =
                tables.has_counts ? tables.support[i] == 0 : tables.joint[i] == 0.0;
            if (!zero) continue;
            RiskFlag flag;
            flag.kind = FlagKind::ZeroSupport;
            flag.protected_level = tables.protected_levels[a];
            flag.target_level = tables.target_levels[t];
            flag.message = std::string("no ") + (t == 1 ? "positive" : "negative") +
                           " examples for level " + tables.protected_levels[a];
            flags.push_back(std::move(flag));
        }
    }
    for (std::size_t a = 0; a < r; ++a) {
        if (tables.prior_protected[a] < low_prior_threshold) {
            RiskFlag flag;
            flag.kind = FlagKind::LowPrior;
            flag.protected_level = tables.protected_levels[a];
            flag.value = tables.prior_protected[a];
            flag.message = "prior probability " + render_fixed(tables.prior_protected[a], 3) +
                           " of level " + tables.protected_levels[a] + " is below threshold " +
                           render_fixed(low_prior_threshold, 3);
            flags.push_back(std::move(flag));
        }
    }
    return flags;
}

}  // namespace biasgauge
