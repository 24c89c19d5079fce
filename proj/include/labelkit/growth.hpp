#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace labelkit {

/// Constants (delta, C, s) of a decent function: on [s, inf)
///   log x <= f(x) <= C * x^(1 - delta)   and   f(xy) <= C * f(x) * f(y).
struct DecencyCertificate {
    double delta = 0.5;
    double C = 1.0;
    double s = 2.0;

    /// Throws DomainError unless delta in (0,1), C >= 1 and s >= 2.
    void validate() const;
};

/// A growth function built from the closed forms below. All logarithms
/// written `log` are base 2; `ln` is natural.
///
///   LogScaled      beta * log x
///   Power          alpha * x^d
///   ExpPolylog     exp(alpha * ln^d x)
///   ExpPolyloglog  exp(beta * ln^gamma(log x))
///   Scaled         beta * g(x)
///   Product        g(x) * h(x)
class GrowthFunction {
public:
    enum class Kind { LogScaled, Power, ExpPolylog, ExpPolyloglog, Scaled, Product };

    static GrowthFunction log_scaled(double beta = 1.0);
    static GrowthFunction power(double alpha, double d);
    static GrowthFunction exp_polylog(double alpha, double d);
    static GrowthFunction exp_polyloglog(double beta, double gamma);
    static GrowthFunction scaled(double beta, GrowthFunction g);
    static GrowthFunction product(GrowthFunction g, GrowthFunction h);

    Kind kind() const noexcept { return kind_; }
    /// beta for LogScaled/ExpPolyloglog/Scaled, alpha for Power/ExpPolylog.
    double coefficient() const noexcept { return a_; }
    /// d for Power/ExpPolylog, gamma for ExpPolyloglog.
    double exponent() const noexcept { return b_; }
    const GrowthFunction& first() const;
    const GrowthFunction& second() const;

    /// Throws DomainError for x < 2.
    double operator()(double x) const;

    /// The mini-language spelling, e.g. "pow:1:0.5" or "scale:2(log)".
    std::string spec() const;

    const std::optional<DecencyCertificate>& certificate() const noexcept { return certificate_; }
    GrowthFunction with_certificate(const DecencyCertificate& cert) const;

private:
    GrowthFunction(Kind kind, double a, double b);

    Kind kind_ = Kind::LogScaled;
    double a_ = 1.0;
    double b_ = 0.0;
    std::shared_ptr<const GrowthFunction> first_;
    std::shared_ptr<const GrowthFunction> second_;
    std::optional<DecencyCertificate> certificate_;
};

double eval(const GrowthFunction& f, double x);

/// Parses `log`, `log*<beta>`, `pow:<alpha>:<d>`, `explog:<alpha>:<d>`,
/// `exploglog:<beta>:<gamma>`, `prod(<spec>,<spec>)`, `scale:<beta>(<spec>)`.
/// Throws DomainError on syntax errors.
GrowthFunction parse_growth_spec(std::string_view text);

/// Certificate for the closed forms, with parameters restricted to
/// alpha > 0, beta >= 1, gamma >= 1, d in (0,1). Throws DomainError when the
/// parameters are out of range or the constants overflow double precision.
DecencyCertificate certify_builtin(const GrowthFunction& f);

/// The attached certificate if present, otherwise certify_builtin(f).
DecencyCertificate certificate_of(const GrowthFunction& f);

using RealFunction = std::function<double(double)>;

struct DecencyCounterexample {
    enum class Kind { LowerGrowth, UpperGrowth, Monotonicity, SubMultiplicativity };

    Kind kind = Kind::LowerGrowth;
    double x = 0.0;
    /// Second argument for Monotonicity (the later point) and SubMultiplicativity.
    double y = 0.0;
    /// The violated inequality reads lhs <= rhs.
    double lhs = 0.0;
    double rhs = 0.0;
    /// 1-based index of the grid pair that failed (monotonicity and
    /// sub-multiplicativity checks both count as pairs); 0 for point checks.
    std::size_t pair_index = 0;
};

const char* to_string(DecencyCounterexample::Kind kind);

struct FalsifierOptions {
    /// Sub-multiplicativity is tested for pairs with x*y up to this value.
    double max_product = 1e6;
    double relative_tolerance = 1e-9;
};

/// Searches the grid for a violation of the certificate. Points are visited in
/// grid order; at point j the growth bounds are tested, then monotonicity
/// against point j-1, then sub-multiplicativity for every pair (i, j), i <= j.
/// Returns the first violation found, or nullopt (evidence, not proof).
/// Throws DomainError if a grid point is below cert.s.
std::optional<DecencyCounterexample> falsify_decency(const RealFunction& f, const DecencyCertificate& cert,
                                                     std::span<const double> grid,
                                                     const FalsifierOptions& options = {});

std::optional<DecencyCounterexample> falsify_decency(const GrowthFunction& f, const DecencyCertificate& cert,
                                                     std::span<const double> grid,
                                                     const FalsifierOptions& options = {});

/// `points` geometrically spaced values in [lo, hi]. With `integral`, values
/// are rounded to integers and duplicates dropped.
std::vector<double> geometric_grid(double lo, double hi, std::size_t points, bool integral = false);

/// log x when floor(x) is odd, sqrt(x) when it is even: non-decent by design.
double parity_function(double x);

} // namespace labelkit
