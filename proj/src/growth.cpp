#include "labelkit/growth.hpp"

#include "labelkit/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace labelkit {

namespace {

constexpr double e_const = 2.718281828459045;

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    // round-trip precision is noisy for the common short values
    std::ostringstream shorter;
    shorter.precision(12);
    shorter << v;
    return std::stod(shorter.str()) == v ? shorter.str() : os.str();
}

} // namespace

void DecencyCertificate::validate() const
{
    require(std::isfinite(delta) && delta > 0.0 && delta < 1.0, "certificate: delta must lie in (0,1)");
    require(std::isfinite(C) && C >= 1.0, "certificate: C must be >= 1");
    require(std::isfinite(s) && s >= 2.0, "certificate: s must be >= 2");
}

GrowthFunction::GrowthFunction(Kind kind, double a, double b)
    : kind_(kind)
    , a_(a)
    , b_(b)
{
    require(std::isfinite(a) && std::isfinite(b), "growth function: parameters must be finite");
}

GrowthFunction GrowthFunction::log_scaled(double beta)
{
    require(beta > 0.0, "log*beta: beta must be positive");
    return {Kind::LogScaled, beta, 0.0};
}

GrowthFunction GrowthFunction::power(double alpha, double d)
{
    require(alpha > 0.0, "pow: alpha must be positive");
    require(d > 0.0, "pow: d must be positive");
    return {Kind::Power, alpha, d};
}

GrowthFunction GrowthFunction::exp_polylog(double alpha, double d)
{
    require(alpha > 0.0, "explog: alpha must be positive");
    require(d > 0.0, "explog: d must be positive");
    return {Kind::ExpPolylog, alpha, d};
}

GrowthFunction GrowthFunction::exp_polyloglog(double beta, double gamma)
{
    require(beta > 0.0, "exploglog: beta must be positive");
    require(gamma > 0.0, "exploglog: gamma must be positive");
    return {Kind::ExpPolyloglog, beta, gamma};
}

GrowthFunction GrowthFunction::scaled(double beta, GrowthFunction g)
{
    require(beta > 0.0, "scale: beta must be positive");
    GrowthFunction f(Kind::Scaled, beta, 0.0);
    f.first_ = std::make_shared<const GrowthFunction>(std::move(g));
    return f;
}

GrowthFunction GrowthFunction::product(GrowthFunction g, GrowthFunction h)
{
    GrowthFunction f(Kind::Product, 1.0, 0.0);
    f.first_ = std::make_shared<const GrowthFunction>(std::move(g));
    f.second_ = std::make_shared<const GrowthFunction>(std::move(h));
    return f;
}

const GrowthFunction& GrowthFunction::first() const
{
    if (!first_)
        throw DomainError("growth function has no inner function");
    return *first_;
}

const GrowthFunction& GrowthFunction::second() const
{
    if (!second_)
        throw DomainError("growth function has no second factor");
    return *second_;
}

double GrowthFunction::operator()(double x) const
{
    if (!(x >= 2.0))
        throw DomainError("growth functions are evaluated on [2, inf); got x = " + fmt(x));
    switch (kind_) {
    case Kind::LogScaled:
        return a_ * std::log2(x);
    case Kind::Power:
        return a_ * std::pow(x, b_);
    case Kind::ExpPolylog:
        return std::exp(a_ * std::pow(std::log(x), b_));
    case Kind::ExpPolyloglog:
        return std::exp(a_ * std::pow(std::log(std::log2(x)), b_));
    case Kind::Scaled:
        return a_ * (*first_)(x);
    case Kind::Product:
        return (*first_)(x) * (*second_)(x);
    }
    return 0.0;
}

double eval(const GrowthFunction& f, double x)
{
    return f(x);
}

std::string GrowthFunction::spec() const
{
    switch (kind_) {
    case Kind::LogScaled:
        return a_ == 1.0 ? "log" : "log*" + fmt(a_);
    case Kind::Power:
        return "pow:" + fmt(a_) + ":" + fmt(b_);
    case Kind::ExpPolylog:
        return "explog:" + fmt(a_) + ":" + fmt(b_);
    case Kind::ExpPolyloglog:
        return "exploglog:" + fmt(a_) + ":" + fmt(b_);
    case Kind::Scaled:
        return "scale:" + fmt(a_) + "(" + first_->spec() + ")";
    case Kind::Product:
        return "prod(" + first_->spec() + "," + second_->spec() + ")";
    }
    return {};
}

GrowthFunction GrowthFunction::with_certificate(const DecencyCertificate& cert) const
{
    cert.validate();
    GrowthFunction f = *this;
    f.certificate_ = cert;
    return f;
}

// --- spec parser -----------------------------------------------------------

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text)
        : t_(text)
    {
    }

    GrowthFunction parse_all()
    {
        GrowthFunction f = parse();
        if (i_ != t_.size())
            fail("trailing characters");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw DomainError("growth spec '" + std::string(t_) + "': " + what + " at offset " + std::to_string(i_));
    }

    bool eat(std::string_view token)
    {
        if (t_.substr(i_, token.size()) == token) {
            i_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token)
    {
        if (!eat(token))
            fail("expected '" + std::string(token) + "'");
    }

    double number()
    {
        std::size_t j = i_;
        while (j < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[j])) || t_[j] == '.' || t_[j] == 'e'
                                 || t_[j] == 'E' || t_[j] == '-' || t_[j] == '+'))
            ++j;
        if (j == i_)
            fail("expected a number");
        const std::string s(t_.substr(i_, j - i_));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            fail("bad number '" + s + "'");
        }
        if (used != s.size())
            fail("bad number '" + s + "'");
        i_ = j;
        return v;
    }

    GrowthFunction parse()
    {
        if (eat("prod(")) {
            GrowthFunction g = parse();
            expect(",");
            GrowthFunction h = parse();
            expect(")");
            return GrowthFunction::product(std::move(g), std::move(h));
        }
        if (eat("scale:")) {
            const double beta = number();
            expect("(");
            GrowthFunction g = parse();
            expect(")");
            return GrowthFunction::scaled(beta, std::move(g));
        }
        if (eat("exploglog:")) {
            const double beta = number();
            expect(":");
            return GrowthFunction::exp_polyloglog(beta, number());
        }
        if (eat("explog:")) {
            const double alpha = number();
            expect(":");
            return GrowthFunction::exp_polylog(alpha, number());
        }
        if (eat("pow:")) {
            const double alpha = number();
            expect(":");
            return GrowthFunction::power(alpha, number());
        }
        if (eat("log")) {
            if (eat("*"))
                return GrowthFunction::log_scaled(number());
            return GrowthFunction::log_scaled(1.0);
        }
        fail("unknown function");
    }

    std::string_view t_;
    std::size_t i_ = 0;
};

} // namespace

GrowthFunction parse_growth_spec(std::string_view text)
{
    return SpecParser(text).parse_all();
}

// --- certificates ------------------------------------------------------------

namespace {

/// Smallest L >= lo (up to bisection precision, rounded up) with pred(L)
/// true, given pred is monotone false -> true on [lo, inf).
template <class Pred>
double first_true(double lo, Pred pred, const char* what)
{
    if (pred(lo))
        return lo;
    double hi = std::max(1.0, 2.0 * lo);
    while (!pred(hi)) {
        hi *= 2.0;
        if (!std::isfinite(hi) || hi > 1e300)
            throw DomainError(std::string(what) + ": certificate constant overflows double precision");
    }
    double a = lo;
    for (int it = 0; it < 200 && hi - a > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (a + hi);
        (pred(mid) ? hi : a) = mid;
    }
    return hi;
}

double finite_or_throw(double v, const char* what)
{
    if (!std::isfinite(v))
        throw DomainError(std::string(what) + ": certificate constant overflows double precision");
    return v;
}

DecencyCertificate certify_power(double alpha, double d)
{
    require(d > 0.0 && d < 1.0, "pow: certification needs d in (0,1)");
    DecencyCertificate c;
    c.delta = 1.0 - d;
    c.C = std::max(alpha, 1.0 / alpha);
    double s = finite_or_throw(std::pow(2.0 / (d * std::max(alpha, 1.0)), 2.0 / d), "pow");
    s = std::max(s, 2.0);
    // The closed form does not always guarantee alpha x^d >= log x on [s, inf)
    // (e.g. alpha < 1). alpha x^d / log x is increasing beyond e^(1/d), and
    // alpha x^d - log x is non-negative everywhere once alpha*d*e*ln2 >= 1.
    const auto lower_ok = [&](double x) { return alpha * std::pow(x, d) >= std::log2(x); };
    const bool everywhere = alpha * d * e_const * std::log(2.0) >= 1.0;
    if (!everywhere && !(s >= std::exp(1.0 / d) && lower_ok(s))) {
        const double start = std::max(s, std::exp(1.0 / d));
        const double L = first_true(std::log(start), [&](double l) { return lower_ok(std::exp(l)); }, "pow");
        s = finite_or_throw(std::exp(L) * (1.0 + 1e-12), "pow");
    }
    c.s = s;
    return c;
}

DecencyCertificate certify_exp_polylog(double alpha, double d)
{
    require(d > 0.0 && d < 1.0, "explog: certification needs d in (0,1)");
    // With L = ln x: f = exp(alpha L^d). delta = 1/2 and C absorbs the bump of
    // alpha L^d - L/2, maximal at L* = (2 alpha d)^(1/(1-d)).
    DecencyCertificate c;
    c.delta = 0.5;
    const double Lstar = std::pow(2.0 * alpha * d, 1.0 / (1.0 - d));
    c.C = finite_or_throw(std::max(1.0, std::exp(alpha * std::pow(Lstar, d) - 0.5 * Lstar)), "explog");
    // Lower bound alpha L^d >= ln(L / ln 2): the difference decreases up to
    // L0 = (1/(alpha d))^(1/d) and increases afterwards.
    const auto h = [&](double L) { return alpha * std::pow(L, d) - std::log(L / std::log(2.0)); };
    const double L0 = std::max(std::log(2.0), std::pow(1.0 / (alpha * d), 1.0 / d));
    if (h(L0) >= 0.0) {
        c.s = 2.0;
    } else {
        const double L1 = first_true(L0, [&](double L) { return h(L) >= 0.0; }, "explog");
        c.s = finite_or_throw(std::max(2.0, std::exp(L1) * (1.0 + 1e-12)), "explog");
    }
    return c;
}

DecencyCertificate certify_exp_polyloglog(double beta, double gamma)
{
    require(beta >= 1.0, "exploglog: certification needs beta >= 1");
    require(gamma >= 1.0, "exploglog: certification needs gamma >= 1");
    // With t = log x, u = ln t: f = exp(beta u^gamma). For x >= 2^(e^gamma)
    // the function is sub-multiplicative with C = 1 and f(x) >= t since u >= 1.
    // The ceiling f <= x^(1/2) reads phi(u) = beta u^gamma - e^u ln2 / 2 <= 0;
    // phi is decreasing once e^u / u^(gamma-1) > 2 beta gamma / ln 2 with
    // u >= gamma - 1, so we search for the first u past that point with phi <= 0.
    DecencyCertificate c;
    c.delta = 0.5;
    c.C = 1.0;
    const double ln2 = std::log(2.0);
    const auto phi = [&](double u) { return beta * std::pow(u, gamma) - std::exp(u) * ln2 / 2.0; };
    const auto decreasing = [&](double u) {
        return u - (gamma - 1.0) * std::log(std::max(u, 1e-300)) > std::log(2.0 * beta * gamma / ln2);
    };
    const double U1 = first_true(std::max(gamma - 1.0, 1e-9), decreasing, "exploglog");
    const double u1 = first_true(U1, [&](double u) { return phi(u) <= 0.0; }, "exploglog");
    const double t = std::max(std::exp(gamma), std::exp(u1));
    c.s = finite_or_throw(std::exp2(t) * (1.0 + 1e-12), "exploglog");
    return c;
}

} // namespace

DecencyCertificate certificate_of(const GrowthFunction& f)
{
    if (f.certificate())
        return *f.certificate();
    return certify_builtin(f);
}

DecencyCertificate certify_builtin(const GrowthFunction& f)
{
    DecencyCertificate c;
    switch (f.kind()) {
    case GrowthFunction::Kind::LogScaled: {
        const double beta = f.coefficient();
        require(beta >= 1.0, "log*beta: certification needs beta >= 1");
        c = {0.5, beta, std::max(16.0, finite_or_throw(std::exp2(2.0 * beta), "log*beta"))};
        break;
    }
    case GrowthFunction::Kind::Power:
        c = certify_power(f.coefficient(), f.exponent());
        break;
    case GrowthFunction::Kind::ExpPolylog:
        c = certify_exp_polylog(f.coefficient(), f.exponent());
        break;
    case GrowthFunction::Kind::ExpPolyloglog:
        c = certify_exp_polyloglog(f.coefficient(), f.exponent());
        break;
    case GrowthFunction::Kind::Scaled: {
        const double beta = f.coefficient();
        require(beta >= 1.0, "scale: certification needs beta >= 1");
        const DecencyCertificate g = certificate_of(f.first());
        c = {g.delta, finite_or_throw(beta * g.C, "scale"), g.s};
        break;
    }
    case GrowthFunction::Kind::Product: {
        const DecencyCertificate g = certificate_of(f.first());
        const DecencyCertificate h = certificate_of(f.second());
        const double delta = g.delta + h.delta - 1.0;
        require(delta > 0.0, "prod: the factors' ceilings multiply to x^(2-dg-dh), which is not below x; "
                             "no certificate (needs delta_g + delta_h > 1)");
        c = {delta, finite_or_throw(g.C * h.C, "prod"), std::max(g.s, h.s)};
        break;
    }
    }
    c.validate();
    return c;
}

// --- falsifier ---------------------------------------------------------------

const char* to_string(DecencyCounterexample::Kind kind)
{
    switch (kind) {
    case DecencyCounterexample::Kind::LowerGrowth:
        return "lower-growth";
    case DecencyCounterexample::Kind::UpperGrowth:
        return "upper-growth";
    case DecencyCounterexample::Kind::Monotonicity:
        return "monotonicity";
    case DecencyCounterexample::Kind::SubMultiplicativity:
        return "sub-multiplicativity";
    }
    return "?";
}

std::optional<DecencyCounterexample> falsify_decency(const RealFunction& f, const DecencyCertificate& cert,
                                                     std::span<const double> grid, const FalsifierOptions& options)
{
    cert.validate();
    for (double x : grid)
        if (!(x >= cert.s))
            throw DomainError("falsify: grid point " + fmt(x) + " lies below s = " + fmt(cert.s));

    const double tol = options.relative_tolerance;
    const auto exceeds = [tol](double lhs, double rhs) { return lhs > rhs + tol * std::max(std::abs(lhs), std::abs(rhs)); };

    std::vector<double> values;
    values.reserve(grid.size());
    std::size_t pairs = 0;
    using Kind = DecencyCounterexample::Kind;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid[j];
        const double fx = f(x);
        values.push_back(fx);
        if (exceeds(std::log2(x), fx))
            return DecencyCounterexample{Kind::LowerGrowth, x, 0.0, std::log2(x), fx, 0};
        const double ceiling = cert.C * std::pow(x, 1.0 - cert.delta);
        if (exceeds(fx, ceiling))
            return DecencyCounterexample{Kind::UpperGrowth, x, 0.0, fx, ceiling, 0};
        if (j > 0) {
            ++pairs;
            if (exceeds(values[j - 1], fx))
                return DecencyCounterexample{Kind::Monotonicity, grid[j - 1], x, values[j - 1], fx, pairs};
        }
        for (std::size_t i = 0; i <= j; ++i) {
            const double xy = grid[i] * x;
            if (xy > options.max_product)
                continue;
            ++pairs;
            const double lhs = f(xy);
            const double rhs = cert.C * values[i] * fx;
            if (exceeds(lhs, rhs))
                return DecencyCounterexample{Kind::SubMultiplicativity, grid[i], x, lhs, rhs, pairs};
        }
    }
    return std::nullopt;
}

std::optional<DecencyCounterexample> falsify_decency(const GrowthFunction& f, const DecencyCertificate& cert,
                                                     std::span<const double> grid, const FalsifierOptions& options)
{
    return falsify_decency(RealFunction([&f](double x) { return f(x); }), cert, grid, options);
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t points, bool integral)
{
    require(lo > 0.0 && hi >= lo, "grid: need 0 < lo <= hi");
    require(points >= 1, "grid: need at least one point");
    std::vector<double> grid;
    grid.reserve(points);
    const double ratio = points == 1 ? 1.0 : std::log(hi / lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        double x = i + 1 == points ? hi : lo * std::exp(ratio * static_cast<double>(i));
        if (integral)
            x = std::clamp(std::round(x), std::ceil(lo), std::floor(hi));
        if (grid.empty() || x > grid.back())
            grid.push_back(x);
    }
    return grid;
}

double parity_function(double x)
{
    const auto n = static_cast<long long>(std::floor(x));
    return n % 2 != 0 ? std::log2(x) : std::sqrt(x);
}

} // namespace labelkit
