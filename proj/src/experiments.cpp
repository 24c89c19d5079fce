#include "labelkit/experiments.hpp"

#include "labelkit/error.hpp"
#include "labelkit/parallel.hpp"
#include "labelkit/proof_constants.hpp"
#include "labelkit/random_graphs.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace labelkit {

namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

enum class Outcome { Good, Violated, Inconclusive };

} // namespace

double edge_probability(const GrowthFunction& f, double gamma, int n)
{
    if (n < 2)
        throw DomainError("edge probability: n must be >= 2");
    return gamma * f(static_cast<double>(n)) / static_cast<double>(n);
}

std::uint64_t edge_count_for(double p, int n)
{
    const double target = p * static_cast<double>(pair_count(n));
    return static_cast<std::uint64_t>(std::max(0.0, std::ceil(target - 1e-9)));
}

std::string ExperimentReport::to_csv() const
{
    std::ostringstream os;
    os << "n,trials,violations,inconclusive,rate,n_pow_minus_2,c_used,p_used\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.trials << ',' << r.violations << ',' << r.inconclusive << ',' << num(r.rate) << ','
           << num(r.n_pow_minus_2) << ',' << num(r.c_used) << ',' << num(r.p_used) << '\n';
    return os.str();
}

ExperimentReport run_goodness_experiment(const ExperimentConfig& cfg)
{
    if (cfg.trials < 1)
        throw DomainError("experiment: trials must be >= 1");
    if (!(cfg.gamma > 1.0))
        throw DomainError("experiment: gamma must be > 1");
    const double c = cfg.c ? *cfg.c : constant_c(certificate_of(cfg.f), cfg.gamma).c;
    if (!(c > 0.0))
        throw DomainError("experiment: c must be positive");

    ExperimentReport report;
    const RngStream base(cfg.seed);
    for (int n : cfg.n_values) {
        ExperimentRow row;
        row.n = n;
        row.c_used = c;
        row.n_pow_minus_2 = n > 0 ? 1.0 / (static_cast<double>(n) * n) : 0.0;
        if (n < 2) {
            row.infeasible = "n must be >= 2";
            report.rows.push_back(row);
            continue;
        }
        row.p_used = edge_probability(cfg.f, cfg.gamma, n);
        if (!(row.p_used <= 1.0)) {
            row.infeasible = "p = gamma f(n)/n = " + num(row.p_used) + " exceeds 1";
            report.rows.push_back(row);
            continue;
        }
        if (n > 64) {
            row.infeasible = "goodness search supports at most 64 vertices";
            report.rows.push_back(row);
            continue;
        }
        const std::uint64_t m = edge_count_for(row.p_used, n);
        const RngStream per_n = base.derive(static_cast<std::uint64_t>(n));
        std::vector<Outcome> outcome(static_cast<std::size_t>(cfg.trials));
        GoodnessOptions gopt;
        gopt.mode = GoodnessMode::Refute;
        gopt.node_budget = cfg.goodness_budget;
        parallel_for(outcome.size(), cfg.threads, [&](std::size_t t) {
            RngStream rng = per_n.derive(t);
            const Graph g = cfg.mode == SampleMode::Gnp ? sample_gnp(n, row.p_used, rng) : sample_gnm(n, m, rng);
            const GoodnessReport r = is_f_good(g, cfg.f, c, gopt);
            outcome[t] = r.verdict == Verdict::Good       ? Outcome::Good
                : r.verdict == Verdict::Violated ? Outcome::Violated
                                                 : Outcome::Inconclusive;
        });
        row.trials = cfg.trials;
        for (Outcome o : outcome) {
            row.good += o == Outcome::Good;
            row.violations += o == Outcome::Violated;
            row.inconclusive += o == Outcome::Inconclusive;
        }
        row.rate = static_cast<double>(row.violations) / static_cast<double>(row.trials);
        report.rows.push_back(row);
    }
    return report;
}

namespace {

bool has_triangle(const Graph& g)
{
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (v > u)
                for (int w : g.neighbors(v))
                    if (w > v && g.adjacent(u, w))
                        return true;
    return false;
}

} // namespace

GraphProperty named_property(std::string_view name, const std::optional<GrowthFunction>& f, std::optional<double> c)
{
    if (name == "triangle")
        return {"triangle", has_triangle};
    if (name == "connected")
        return {"connected", [](const Graph& g) { return g.connected(); }};
    if (name == "true")
        return {"true", [](const Graph&) { return true; }};
    if (name == "false")
        return {"false", [](const Graph&) { return false; }};
    if (name == "good") {
        if (!f || !c)
            throw DomainError("property 'good' needs a growth function and c");
        const GrowthFunction fn = *f;
        const double cv = *c;
        return {"good", [fn, cv](const Graph& g) {
                    GoodnessOptions o;
                    o.mode = GoodnessMode::Refute;
                    const auto r = is_f_good(g, fn, cv, o);
                    if (r.verdict == Verdict::Inconclusive)
                        throw DomainError("property 'good': goodness check inconclusive");
                    return r.verdict == Verdict::Good;
                }};
    }
    throw DomainError("unknown property '" + std::string(name) + "' (triangle, connected, true, false, good)");
}

Interval wilson_interval(long long hits, long long trials, double z)
{
    if (trials <= 0 || hits < 0 || hits > trials)
        throw DomainError("wilson interval: need 0 <= hits <= trials, trials > 0");
    const auto nt = static_cast<double>(trials);
    const double ph = static_cast<double>(hits) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double centre = (ph + z2 / (2.0 * nt)) / denom;
    const double half = z * std::sqrt(ph * (1.0 - ph) / nt + z2 / (4.0 * nt * nt)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TransferReport run_transfer_experiment(const GraphProperty& property, const TransferConfig& cfg)
{
    if (cfg.trials < 1)
        throw DomainError("transfer: trials must be >= 1");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0))
        throw DomainError("transfer: p must lie in [0, 1]");
    if (cfg.n < 0)
        throw DomainError("transfer: n must be non-negative");
    TransferReport r;
    r.property = property.name;
    r.n = cfg.n;
    r.p = cfg.p;
    r.m = edge_count_for(cfg.p, cfg.n);
    r.trials = cfg.trials;
    r.scale = 10.0 * std::sqrt(static_cast<double>(r.m));

    const RngStream base(cfg.seed);
    const RngStream gnm_stream = base.derive(0);
    const RngStream gnp_stream = base.derive(1);
    std::vector<char> hit_m(static_cast<std::size_t>(cfg.trials)), hit_p(static_cast<std::size_t>(cfg.trials));
    parallel_for(hit_m.size(), cfg.threads, [&](std::size_t t) {
        RngStream a = gnm_stream.derive(t);
        RngStream b = gnp_stream.derive(t);
        hit_m[t] = property.holds(sample_gnm(cfg.n, r.m, a));
        hit_p[t] = property.holds(sample_gnp(cfg.n, cfg.p, b));
    });
    for (std::size_t t = 0; t < hit_m.size(); ++t) {
        r.hits_gnm += hit_m[t];
        r.hits_gnp += hit_p[t];
    }
    r.freq_gnm = static_cast<double>(r.hits_gnm) / cfg.trials;
    r.freq_gnp = static_cast<double>(r.hits_gnp) / cfg.trials;
    r.ci_gnm = wilson_interval(r.hits_gnm, cfg.trials);
    r.ci_gnp = wilson_interval(r.hits_gnp, cfg.trials);
    r.holds_empirically = r.freq_gnm <= r.scale * r.freq_gnp;
    r.violation = r.ci_gnm.lo > r.scale * r.ci_gnp.hi;
    return r;
}

} // namespace labelkit
