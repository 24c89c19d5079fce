#pragma once

#include "labelkit/growth.hpp"

namespace labelkit {

struct ProofConstants {
    double c1 = 0.0; ///< 15 e C^4 gamma / delta
    double c2 = 0.0; ///< C^2 s e^2 gamma
    double c = 0.0;  ///< max(c1, c2, s(s-1)/2)
};

/// Throws DomainError unless gamma > 1 and the certificate is valid.
ProofConstants constant_c(const DecencyCertificate& cert, double gamma);

/// Which density bound governs subgraphs on k of n vertices: Small when
/// k*k <= n (the bound divided by log k), Large otherwise.
enum class DensityRegime { Small, Large };

const char* to_string(DensityRegime r);

struct RatioReport {
    DensityRegime regime = DensityRegime::Large;
    /// Small regime only: n^(2/3) / (k (log k)^(1/delta)) >= s, the side
    /// condition under which the bound is derived. Always true for Large.
    bool in_regime = true;
    double side_condition = 0.0;

    /// f(k)/f(n) against k/(C^2 s n) (Large) or (k log k / (C^4 n)) n^(delta/3) (Small).
    double ratio = 0.0;
    double ratio_bound = 0.0;
    bool ratio_holds = false;

    /// The Chernoff parameter 1+a built from c1 or c2, against e (Large) or
    /// e n^(delta/3) (Small).
    double one_plus_a = 0.0;
    double one_plus_a_bound = 0.0;
    bool one_plus_a_holds = false;

    bool holds() const { return ratio_holds && one_plus_a_holds; }
};

/// Evaluates both sides of the density-ratio bounds for one (n, k).
/// Throws DomainError unless s <= k <= n and gamma > 1.
RatioReport ratio_inequalities(const GrowthFunction& f, const DecencyCertificate& cert, double gamma, long long n,
                               long long k);

} // namespace labelkit
