#pragma once

#include "labelkit/growth.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace labelkit {

struct LedgerInput {
    GrowthFunction f = GrowthFunction::log_scaled();
    /// Defaults to certificate_of(f).
    std::optional<DecencyCertificate> certificate;
    /// Defaults to 4 / delta.
    std::optional<double> gamma;
    std::vector<double> n_grid;
};

/// All quantities are log2 of counts; o(1) terms are dropped.
struct LedgerPoint {
    double n = 0.0;
    double log2_u = 0.0; ///< f(n) log n
    double log2_k = 0.0; ///< log2 ceil(2^sqrt(n f(n)))
    /// log2 of E1 = u^2 + k n log u, the exponent of the upper count 2^(u^2) u^(k n).
    double log2_e1 = 0.0;
    /// log2 of E2 = k (gamma delta / 2) n f(n) log n, the exponent of the lower count.
    double log2_e2 = 0.0;
    double ratio = 0.0; ///< E2 / E1
    bool dominant = false;
};

struct LedgerReport {
    double delta = 0.0;
    double gamma = 0.0;
    std::vector<LedgerPoint> points;
    /// First grid point where E2 > E1, if any.
    std::optional<double> crossover;
};

/// Throws DomainError if f cannot be certified, gamma <= 1, or a grid point is < 2.
LedgerReport counting_ledger(const LedgerInput& in);

/// "2^a..2^b" (every integer exponent), or a comma list of numbers and 2^x terms.
std::vector<double> parse_n_grid(std::string_view text);

/// log2(2^a + 2^b) without overflow.
double log2_sum(double a, double b);

} // namespace labelkit
