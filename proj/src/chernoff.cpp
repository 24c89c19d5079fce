#include "labelkit/chernoff.hpp"

#include "labelkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace labelkit {

ChernoffBounds chernoff_tail(long long N, double p, double t)
{
    if (N < 0 || !(p >= 0.0 && p <= 1.0))
        throw DomainError("chernoff: need N >= 0 and p in [0, 1]");
    ChernoffBounds b;
    b.mu = static_cast<double>(N) * p;
    if (!(b.mu > 0.0) || !(t > b.mu))
        throw DomainError("chernoff: the bound needs t > mu > 0");
    b.one_plus_a = t / b.mu;
    const double l = std::log(b.one_plus_a);
    b.tight = std::exp(t - b.mu - t * l);
    b.loose = std::exp(t - t * l);
    return b;
}

double binomial_upper_tail(long long N, double p, double t)
{
    if (N < 0 || !(p >= 0.0 && p <= 1.0))
        throw DomainError("binomial tail: need N >= 0 and p in [0, 1]");
    const long long first = t < 0.0 ? 0 : static_cast<long long>(std::floor(t)) + 1;
    if (first > N)
        return 0.0;
    if (p == 0.0)
        return first <= 0 ? 1.0 : 0.0;
    if (p == 1.0)
        return 1.0;
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    const double lgN = std::lgamma(static_cast<double>(N) + 1.0);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(N - first + 1));
    double peak = -INFINITY;
    for (long long j = first; j <= N; ++j) {
        const auto jd = static_cast<double>(j);
        const double lt = lgN - std::lgamma(jd + 1.0) - std::lgamma(static_cast<double>(N - j) + 1.0) + jd * lp
            + static_cast<double>(N - j) * lq;
        terms.push_back(lt);
        peak = std::max(peak, lt);
    }
    double sum = 0.0;
    for (double lt : terms)
        sum += std::exp(lt - peak);
    return std::min(1.0, std::exp(peak) * sum);
}

} // namespace labelkit
