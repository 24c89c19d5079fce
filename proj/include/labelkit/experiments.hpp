#pragma once

#include "labelkit/goodness.hpp"
#include "labelkit/graph.hpp"
#include "labelkit/growth.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace labelkit {

enum class SampleMode { Gnp, Gnm };

struct ExperimentConfig {
    std::vector<int> n_values;
    GrowthFunction f = GrowthFunction::log_scaled();
    double gamma = 2.0;
    /// Goodness scale; when empty, constant_c(certificate_of(f), gamma).c.
    std::optional<double> c;
    int trials = 100;
    SampleMode mode = SampleMode::Gnp;
    std::uint64_t seed = 42;
    std::uint64_t goodness_budget = 50'000'000;
    unsigned threads = 1;
};

struct ExperimentRow {
    int n = 0;
    int trials = 0;
    int violations = 0;
    int good = 0;
    int inconclusive = 0;
    double rate = 0.0;
    double n_pow_minus_2 = 0.0;
    double c_used = 0.0;
    double p_used = 0.0;
    /// Set when the configuration cannot be run at this n; counts stay 0.
    std::optional<std::string> infeasible;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;

    /// Columns: n,trials,violations,inconclusive,rate,n_pow_minus_2,c_used,p_used
    std::string to_csv() const;
};

/// p = gamma f(n) / n and m = ceil(p C(n,2)).
double edge_probability(const GrowthFunction& f, double gamma, int n);
std::uint64_t edge_count_for(double p, int n);

/// Samples G(n, p) (or G(n, m)) per trial and checks (c f)-goodness in
/// refutation mode. Trial t at size n uses seed derive(derive(seed, n), t).
ExperimentReport run_goodness_experiment(const ExperimentConfig& cfg);

struct GraphProperty {
    std::string name;
    std::function<bool(const Graph&)> holds;
};

/// "triangle", "connected", "true", "false", or "good" (needs f and c).
GraphProperty named_property(std::string_view name, const std::optional<GrowthFunction>& f = std::nullopt,
                             std::optional<double> c = std::nullopt);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval; z = 3.29 is two-sided 99.9%.
Interval wilson_interval(long long hits, long long trials, double z = 3.29);

struct TransferConfig {
    int n = 20;
    double p = 0.1;
    int trials = 10000;
    std::uint64_t seed = 42;
    unsigned threads = 1;
};

struct TransferReport {
    std::string property;
    int n = 0;
    double p = 0.0;
    std::uint64_t m = 0;
    int trials = 0;
    int hits_gnm = 0;
    int hits_gnp = 0;
    double freq_gnm = 0.0;
    double freq_gnp = 0.0;
    Interval ci_gnm;
    Interval ci_gnp;
    double scale = 0.0; ///< 10 sqrt(m)
    /// Point estimates: freq_gnm <= scale * freq_gnp.
    bool holds_empirically = false;
    /// Raised only when ci_gnm.lo > scale * ci_gnp.hi.
    bool violation = false;
};

/// Frequencies of the property under G(n, m) and G(n, p) with m = ceil(p C(n,2)).
TransferReport run_transfer_experiment(const GraphProperty& property, const TransferConfig& cfg);

} // namespace labelkit
