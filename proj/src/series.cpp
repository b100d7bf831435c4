#include "pvalent/series.hpp"

#include <cmath>
#include <string>

#include "pvalent/errors.hpp"

namespace pvalent {

MultivalentFunction::MultivalentFunction(int p, int n, std::vector<Complex> coeffs)
    : p_(p), n_(n), coeffs_(std::move(coeffs)) {
  if (p_ < 1) throw DomainError("valence p must be >= 1, got " + std::to_string(p_));
  if (n_ < 1) throw DomainError("first index n must be >= 1, got " + std::to_string(n_));
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("coefficients must be finite");
  }
}

Complex MultivalentFunction::coeff(int k) const noexcept {
  if (k < n_ || k > order()) return {};
  return coeffs_[static_cast<std::size_t>(k - n_)];
}

MultivalentFunction MultivalentFunction::with_order(int K) const {
  if (K < n_ - 1) throw DomainError("truncation order below n - 1");
  std::vector<Complex> c(static_cast<std::size_t>(K - n_ + 1));
  for (int k = n_; k <= K; ++k) c[static_cast<std::size_t>(k - n_)] = coeff(k);
  return {p_, n_, std::move(c)};
}

void OperatorParams::validate(int p) const {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("lambda must lie in [0, 1], got " + std::to_string(lambda));
  if (m < 0) throw DomainError("m must be >= 0");
  if (omega < 0) throw DomainError("Omega must be >= 0");
  if (p <= m)
    throw DomainError("require p > m, got p = " + std::to_string(p) + ", m = " + std::to_string(m));
}

TruncatedSeries::TruncatedSeries(int lead_exp, Complex lead_coeff, std::vector<Term> tail)
    : lead_exp_(lead_exp), lead_coeff_(lead_coeff), tail_(std::move(tail)) {
  if (lead_exp_ < 0) throw InvalidArgument("lead exponent must be >= 0");
  int prev = lead_exp_;
  for (const auto& t : tail_) {
    if (t.exp <= prev) throw InvalidArgument("tail exponents must be strictly increasing");
    prev = t.exp;
  }
}

std::vector<Complex> TruncatedSeries::dense_quotient() const {
  std::vector<Complex> out(static_cast<std::size_t>(degree() - lead_exp_ + 1));
  out[0] = lead_coeff_;
  for (const auto& t : tail_) out[static_cast<std::size_t>(t.exp - lead_exp_)] = t.coeff;
  return out;
}

double falling_factorial(int x, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= static_cast<double>(x - i);
  return r;
}

double factorial_ratio(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("factorial of a negative integer");
  return a >= b ? falling_factorial(a, a - b) : 1.0 / falling_factorial(b, b - a);
}

namespace {

// ((k+p-m)/(p-m))^Omega as Omega ratio factors
double salagean_multiplier(int exp, int base, int omega) {
  const double ratio = static_cast<double>(exp) / static_cast<double>(base);
  double r = 1.0;
  for (int i = 0; i < omega; ++i) r *= ratio;
  return r;
}

}  // namespace

double operator_weight(int k, int p, const OperatorParams& op) {
  const int base = p - op.m;
  return falling_factorial(k + p, op.m) * salagean_multiplier(k + base, base, op.omega) *
         (1.0 + op.lambda * k / base);
}

double derivative_weight(int k, int p, const OperatorParams& op) {
  return static_cast<double>(k + p - op.m) * operator_weight(k, p, op);
}

TruncatedSeries derivative_m(const MultivalentFunction& f, int m) {
  const int p = f.p();
  if (m < 0) throw DomainError("m must be >= 0");
  if (m >= p) throw DomainError("derivative order m must be below p");
  std::vector<Term> tail;
  tail.reserve(f.coeffs().size());
  for (int k = f.n(); k <= f.order(); ++k)
    tail.push_back({k + p - m, falling_factorial(k + p, m) * f.coeff(k)});
  return {p - m, falling_factorial(p, m), std::move(tail)};
}

TruncatedSeries salagean(const TruncatedSeries& s, int omega, int p, int m) {
  if (m < 0 || p <= m) throw DomainError("require p > m >= 0");
  if (omega < 0) throw DomainError("Omega must be >= 0");
  if (s.lead_exp() != p - m)
    throw DomainError("series does not start at z^(p-m); not an m-th derivative of valence p");
  if (omega == 0) return s;
  std::vector<Term> tail(s.tail().begin(), s.tail().end());
  for (auto& t : tail) t.coeff *= salagean_multiplier(t.exp, p - m, omega);
  return {s.lead_exp(), s.lead_coeff(), std::move(tail)};
}

TruncatedSeries apply_operator(const MultivalentFunction& f, const OperatorParams& op) {
  const int p = f.p();
  op.validate(p);
  std::vector<Term> tail;
  tail.reserve(f.coeffs().size());
  for (int k = f.n(); k <= f.order(); ++k)
    tail.push_back({k + p - op.m, operator_weight(k, p, op) * f.coeff(k)});
  return {p - op.m, falling_factorial(p, op.m), std::move(tail)};
}

TruncatedSeries apply_operator_prime_normalized(const MultivalentFunction& f,
                                                const OperatorParams& op) {
  const int p = f.p();
  op.validate(p);
  std::vector<Term> tail;
  tail.reserve(f.coeffs().size());
  for (int k = f.n(); k <= f.order(); ++k)
    tail.push_back({k, derivative_weight(k, p, op) * f.coeff(k)});
  return {0, falling_factorial(p, op.m + 1), std::move(tail)};
}

namespace {

Complex ipow(Complex z, int e) {
  Complex r{1.0, 0.0};
  for (; e > 0; --e) r *= z;
  return r;
}

}  // namespace

Complex evaluate(const TruncatedSeries& s, Complex z) {
  const auto tail = s.tail();
  Complex acc{};
  int top = s.lead_exp();
  if (!tail.empty()) {
    top = tail.back().exp;
    acc = tail.back().coeff;
    for (std::size_t i = tail.size() - 1; i-- > 0;) {
      acc = acc * ipow(z, top - tail[i].exp) + tail[i].coeff;
      top = tail[i].exp;
    }
    acc *= ipow(z, top - s.lead_exp());
  }
  acc += s.lead_coeff();
  return acc * ipow(z, s.lead_exp());
}

Complex evaluate(std::span<const Complex> poly, Complex z) {
  Complex acc{};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace pvalent
