#pragma once

namespace labelkit {

struct ChernoffBounds {
    double mu = 0.0;
    double one_plus_a = 0.0;
    /// (e^a / (1+a)^(1+a))^mu
    double tight = 0.0;
    /// exp(-(1+a) mu ln((1+a)/e))
    double loose = 0.0;
};

/// Upper bounds on P(Bin(N, p) > t) with mu = Np and 1+a = t/mu, evaluated in
/// log space. Throws DomainError unless t > mu > 0.
ChernoffBounds chernoff_tail(long long N, double p, double t);

/// P(Bin(N, p) > t), summed term by term in log space.
double binomial_upper_tail(long long N, double p, double t);

} // namespace labelkit
