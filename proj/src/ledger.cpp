#include "labelkit/ledger.hpp"

#include "labelkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace labelkit {

double log2_sum(double a, double b)
{
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log2(1.0 + std::exp2(lo - hi));
}

LedgerReport counting_ledger(const LedgerInput& in)
{
    DecencyCertificate cert;
    try {
        cert = in.certificate ? *in.certificate : certificate_of(in.f);
        cert.validate();
    } catch (const DomainError& e) {
        throw DomainError(std::string("ledger: growth function is not certified decent: ") + e.what());
    }
    LedgerReport r;
    r.delta = cert.delta;
    r.gamma = in.gamma ? *in.gamma : 4.0 / cert.delta;
    if (!(r.gamma > 1.0))
        throw DomainError("ledger: gamma must be > 1");

    for (double n : in.n_grid) {
        if (!(n >= 2.0))
            throw DomainError("ledger: grid points must be >= 2");
        LedgerPoint p;
        p.n = n;
        const double fn = in.f(n);
        const double logn = std::log2(n);
        p.log2_u = fn * logn;
        const double root = std::sqrt(n * fn);
        // ceil only matters while 2^root is small enough to be exact
        p.log2_k = root < 52.0 ? std::log2(std::ceil(std::exp2(root))) : root;
        const double log2_nflog = std::log2(n * fn * logn);
        p.log2_e1 = log2_sum(2.0 * p.log2_u, p.log2_k + log2_nflog);
        p.log2_e2 = p.log2_k + std::log2(r.gamma * cert.delta / 2.0) + log2_nflog;
        p.ratio = std::exp2(p.log2_e2 - p.log2_e1);
        p.dominant = p.log2_e2 > p.log2_e1;
        if (p.dominant && !r.crossover)
            r.crossover = n;
        r.points.push_back(p);
    }
    return r;
}

namespace {

double parse_term(std::string_view t)
{
    while (!t.empty() && t.front() == ' ')
        t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ')
        t.remove_suffix(1);
    const std::string s(t);
    std::size_t used = 0;
    try {
        if (s.rfind("2^", 0) == 0) {
            const double e = std::stod(s.substr(2), &used);
            if (used == s.size() - 2)
                return std::exp2(e);
        } else {
            const double v = std::stod(s, &used);
            if (used == s.size())
                return v;
        }
    } catch (const std::exception&) {
    }
    throw DomainError("n grid: bad term '" + s + "'");
}

} // namespace

std::vector<double> parse_n_grid(std::string_view text)
{
    std::vector<double> grid;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const std::string_view a = text.substr(0, dots);
        const std::string_view b = text.substr(dots + 2);
        if (a.rfind("2^", 0) != 0 || b.rfind("2^", 0) != 0)
            throw DomainError("n grid: ranges are written 2^a..2^b");
        const double lo = std::log2(parse_term(a));
        const double hi = std::log2(parse_term(b));
        if (lo != std::floor(lo) || hi != std::floor(hi) || hi < lo || hi - lo > 1000)
            throw DomainError("n grid: range exponents must be integers with a <= b");
        for (double e = lo; e <= hi; e += 1.0)
            grid.push_back(std::exp2(e));
        return grid;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view term = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        grid.push_back(parse_term(term));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return grid;
}

} // namespace labelkit
