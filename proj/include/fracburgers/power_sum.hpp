#ifndef FRACBURGERS_POWER_SUM_HPP
#define FRACBURGERS_POWER_SUM_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fracburgers {

// Pair of fractional orders (alpha for t, beta for x), each in (0, 1].
struct FracOrders {
    double alpha = 1.0;
    double beta = 1.0;

    void validate() const
    {
        if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0 && beta <= 1.0))
            throw std::invalid_argument("FracOrders: orders must lie in (0, 1]");
    }
};

enum class Var { x, t };

struct ExponentBelowOrder : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonCommensurateExponent : std::domain_error {
    using std::domain_error::domain_error;
};

struct PowerTerm {
    double coef = 0.0;
    double xExp = 0.0;
    double tExp = 0.0;
};

// Finite sum  sum_i c_i x^{p_i} t^{q_i}  with nonnegative exponents.
// Terms are kept sorted by (xExp, tExp); coefficients below 1e-14 in
// magnitude are dropped by normalization.
class GenPowerSum {
  public:
    static constexpr double kCoefTol = 1e-14;
    static constexpr double kExpTol = 1e-12;

    GenPowerSum() = default;
    explicit GenPowerSum(std::vector<PowerTerm> terms, bool allowNegative = false);

    static GenPowerSum constant(double c) { return monomial(c, 0.0, 0.0); }
    static GenPowerSum monomial(double c, double xExp, double tExp);

    const std::vector<PowerTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    double eval(double x, double t) const;

    GenPowerSum operator+(const GenPowerSum& o) const;
    GenPowerSum operator-(const GenPowerSum& o) const;
    GenPowerSum operator*(const GenPowerSum& o) const;
    GenPowerSum operator*(double s) const;
    GenPowerSum operator-() const { return *this * -1.0; }

    bool allows_negative() const { return allowNegative_; }

    std::string to_string() const;

  private:
    std::vector<PowerTerm> terms_;
    bool allowNegative_ = false;

    void normalize();
};

inline GenPowerSum operator*(double s, const GenPowerSum& p) { return p * s; }

// Term-wise Jumarie power rule D^a [x^p] = Gamma(1+p)/Gamma(1+p-a) x^{p-a};
// constants (in the active variable) map to zero. Throws ExponentBelowOrder
// when 0 < p < a for some term.
GenPowerSum mrl_derivative_power(const GenPowerSum& p, double order, Var var);

// Exact fractional antiderivative on power sums (zero integration constant):
// x^p -> Gamma(1+p)/Gamma(1+p+a) x^{p+a}.
GenPowerSum frac_primitive_power(const GenPowerSum& p, double order, Var var);

namespace detail {
// Power rule extended to arbitrary real exponents via the reciprocal gamma
// (zero coefficient at the poles).  Diagnostic use only; the result may
// carry negative exponents.
GenPowerSum mrl_derivative_power_relaxed(const GenPowerSum& p, double order, Var var);
}

} // namespace fracburgers

#endif
