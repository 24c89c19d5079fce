#include "labelkit/proof_constants.hpp"

#include "labelkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace labelkit {

ProofConstants constant_c(const DecencyCertificate& cert, double gamma)
{
    cert.validate();
    if (!(gamma > 1.0) || !std::isfinite(gamma))
        throw DomainError("constant_c: gamma must be > 1");
    constexpr double e = std::numbers::e;
    const double C = cert.C;
    ProofConstants out;
    out.c2 = C * C * cert.s * e * e * gamma;
    out.c1 = e * 15.0 * (C * C) * (C * C) * gamma / cert.delta;
    out.c = std::max({out.c1, out.c2, cert.s * (cert.s - 1.0) / 2.0});
    return out;
}

const char* to_string(DensityRegime r)
{
    return r == DensityRegime::Small ? "small" : "large";
}

RatioReport ratio_inequalities(const GrowthFunction& f, const DecencyCertificate& cert, double gamma, long long n,
                               long long k)
{
    const ProofConstants pc = constant_c(cert, gamma);
    const auto kd = static_cast<double>(k);
    const auto nd = static_cast<double>(n);
    if (!(kd >= cert.s) || k > n)
        throw DomainError("ratio_inequalities: need s <= k <= n (s = " + std::to_string(cert.s)
                          + ", k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");

    RatioReport r;
    const double C = cert.C;
    const double fk = f(kd);
    const double fn = f(nd);
    r.ratio = fk / fn;
    if (k * k > n) {
        r.regime = DensityRegime::Large;
        r.ratio_bound = kd / (C * C * cert.s * nd);
        r.one_plus_a = 2.0 * pc.c2 * nd * fk / (gamma * (kd - 1.0) * fn);
        r.one_plus_a_bound = std::numbers::e;
    } else {
        r.regime = DensityRegime::Small;
        const double lk = std::log2(kd);
        const double ndelta = std::pow(nd, cert.delta / 3.0);
        r.side_condition = std::pow(nd, 2.0 / 3.0) / (kd * std::pow(lk, 1.0 / cert.delta));
        r.in_regime = r.side_condition >= cert.s;
        r.ratio_bound = kd * lk / (C * C * C * C * nd) * ndelta;
        r.one_plus_a = 2.0 * pc.c1 * nd * fk / (gamma * (kd - 1.0) * fn * lk);
        r.one_plus_a_bound = std::numbers::e * ndelta;
    }
    r.ratio_holds = r.ratio >= r.ratio_bound;
    r.one_plus_a_holds = r.one_plus_a > r.one_plus_a_bound;
    return r;
}

} // namespace labelkit
