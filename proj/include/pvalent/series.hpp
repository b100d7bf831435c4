#ifndef PVALENT_SERIES_HPP
#define PVALENT_SERIES_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pvalent {

using Complex = std::complex<double>;

/// Truncated p-valent function f(z) = z^p + sum_{k=n}^{K} a_{k+p} z^{k+p}.
///
/// The leading coefficient of z^p is implicitly 1. Coefficients are stored
/// densely for k = n..K; an empty list means f(z) = z^p.
class MultivalentFunction {
public:
  MultivalentFunction(int p, int n, std::vector<Complex> coeffs = {});

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  /// Truncation order K; n - 1 when there is no perturbation.
  int order() const noexcept { return n_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// a_{k+p}, zero outside the stored range.
  Complex coeff(int k) const noexcept;

  /// Same (p, n) with the tail zero-extended (or cut) to order K.
  MultivalentFunction with_order(int K) const;

  friend bool operator==(const MultivalentFunction&, const MultivalentFunction&) = default;

private:
  int p_;
  int n_;
  std::vector<Complex> coeffs_;
};

/// Parameters (lambda, m, Omega) of the combined operator.
struct OperatorParams {
  double lambda = 0.0;
  int m = 0;
  int omega = 0;

  /// Throws DomainError unless 0 <= lambda <= 1, m >= 0, Omega >= 0 and p > m.
  void validate(int p) const;

  friend bool operator==(const OperatorParams&, const OperatorParams&) = default;
};

struct Term {
  int exp;
  Complex coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite power series lead_coeff z^lead_exp + sum tail[i].coeff z^tail[i].exp,
/// tail exponents strictly increasing and above lead_exp.
class TruncatedSeries {
public:
  TruncatedSeries(int lead_exp, Complex lead_coeff, std::vector<Term> tail = {});

  int lead_exp() const noexcept { return lead_exp_; }
  Complex lead_coeff() const noexcept { return lead_coeff_; }
  std::span<const Term> tail() const noexcept { return tail_; }
  int degree() const noexcept { return tail_.empty() ? lead_exp_ : tail_.back().exp; }

  /// Dense coefficients of s(z) / z^lead_exp, index = power of z.
  std::vector<Complex> dense_quotient() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  int lead_exp_;
  Complex lead_coeff_;
  std::vector<Term> tail_;
};

/// x (x-1) ... (x-j+1); 1 when j == 0.
double falling_factorial(int x, int j);

/// a! / b! as a product (or reciprocal product) of |a - b| factors.
double factorial_ratio(int a, int b);

/// Coefficient weight of the operator on a_{k+p}:
/// (k+p)!/(k+p-m)! * ((k+p-m)/(p-m))^Omega * (1 + lambda k/(p-m)).
double operator_weight(int k, int p, const OperatorParams& op);

/// (k+p-m) * operator_weight: the weight of the normalized derivative.
double derivative_weight(int k, int p, const OperatorParams& op);

/// m-fold derivative f^(m). Throws DomainError when m >= p.
TruncatedSeries derivative_m(const MultivalentFunction& f, int m);

/// Omega-fold normalized derivative z (.)'/(p-m) of a series produced by
/// derivative_m(f, m) for f of valence p.
TruncatedSeries salagean(const TruncatedSeries& s, int omega, int p, int m);

/// (1 - lambda) D^Omega f^(m) + lambda z/(p-m) (D^Omega f^(m))'.
TruncatedSeries apply_operator(const MultivalentFunction& f, const OperatorParams& op);

/// Derivative of apply_operator divided by z^(p-m-1): a polynomial with
/// constant term p!/(p-m-1)! and coefficient derivative_weight(k) a_{k+p} at z^k.
TruncatedSeries apply_operator_prime_normalized(const MultivalentFunction& f,
                                                const OperatorParams& op);

/// Horner evaluation of the full truncated series.
Complex evaluate(const TruncatedSeries& s, Complex z);

/// Horner evaluation of a dense polynomial (index = power).
Complex evaluate(std::span<const Complex> poly, Complex z);

}  // namespace pvalent

#endif
