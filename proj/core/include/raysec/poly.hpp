#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace raysec {

using Complex = std::complex<double>;

/// Raised for inputs that violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial with complex coefficients in ascending
/// degree order: coeffs()[j] multiplies z^j.
///
/// Only coefficients that compare equal to 0.0 are trimmed from the top;
/// tiny nonzero values are kept as given. The zero polynomial is the
/// empty coefficient sequence and has no degree.
class Polynomial {
 public:
  Polynomial() = default;

  /// Throws InvalidInput if any coefficient is NaN or infinite.
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial from_real(std::span<const double> coeffs);
  /// c * z^k
  static Polynomial monomial(Complex c, std::size_t k);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;

  /// Coefficient of z^j; 0 beyond the stored range.
  Complex operator[](std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : Complex{};
  }
  Complex leading() const noexcept {
    return coeffs_.empty() ? Complex{} : coeffs_.back();
  }

  /// Number of exactly-zero low-order coefficients (origin multiplicity).
  std::size_t origin_multiplicity() const noexcept;
  /// Largest |a_j|; 0 for the zero polynomial.
  double max_abs_coeff() const noexcept;

  Complex operator()(Complex z) const;

  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    return lhs += rhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    return lhs -= rhs;
  }
  friend Polynomial operator*(Polynomial p, Complex s) { return p *= s; }
  friend Polynomial operator*(Complex s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

/// Horner evaluation. For degree > 200 and |z| > 1 the reversed polynomial
/// is evaluated in 1/z and rescaled by z^deg.
Complex eval(const Polynomial& p, Complex z);

/// Backward-error style residual |P(z)| / sum_j |a_j| |z|^j. Evaluated in
/// 1/z when |z| > 1 so it stays finite for high degree and large roots.
double normalized_residual(const Polynomial& p, Complex z);

/// Newton correction P(z)/P'(z), computed in 1/z when |z| > 1.
Complex newton_correction(const Polynomial& p, Complex z);

/// leading * prod_j (z - roots[j]); throws InvalidInput if leading is 0.
Polynomial from_roots(std::span<const Complex> roots, Complex leading);

/// Sign changes in a real sequence after discarding zeros.
std::size_t sign_changes(std::span<const double> coeffs);

/// Real parts of the coefficients, as used by sign_changes.
std::vector<double> real_coeffs(const Polynomial& p);

struct RealnessReport {
  bool is_real = true;
  double max_imag = 0.0;
};

RealnessReport check_realness(const Polynomial& p, double tolerance);

std::string to_string(const Polynomial& p);

}  // namespace raysec
