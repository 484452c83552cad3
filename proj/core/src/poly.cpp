#include "raysec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace raysec {
namespace {

constexpr std::size_t kScaledEvalDegree = 200;

bool is_finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

// Horner on the reversed coefficient sequence: sum_j a_{n-j} w^j.
Complex horner_reversed(const std::vector<Complex>& a, Complex w) {
  Complex acc{};
  for (const Complex& c : a) acc = acc * w + c;
  return acc;
}

Complex horner(const std::vector<Complex>& a, Complex z) {
  Complex acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Complex& c : coeffs_) {
    if (!is_finite(c)) throw InvalidInput("polynomial coefficient is not finite");
  }
  trim();
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
  return Polynomial(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

Polynomial Polynomial::monomial(Complex c, std::size_t k) {
  std::vector<Complex> a(k + 1);
  a[k] = c;
  return Polynomial(std::move(a));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Polynomial::origin_multiplicity() const noexcept {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == Complex{}) ++k;
  return k;
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex z) const { return eval(*this, z); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    d[j - 1] = coeffs_[j] * static_cast<double>(j);
  }
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  if (!is_finite(s)) throw InvalidInput("scalar is not finite");
  for (Complex& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Complex eval(const Polynomial& p, Complex z) {
  const auto& a = p.coeffs();
  if (a.empty()) return {};
  const std::size_t n = a.size() - 1;
  if (n > kScaledEvalDegree && std::abs(z) > 1.0) {
    const Complex w = 1.0 / z;
    return std::pow(z, static_cast<double>(n)) * horner_reversed(a, w);
  }
  return horner(a, z);
}

double normalized_residual(const Polynomial& p, Complex z) {
  const auto& a = p.coeffs();
  if (a.empty()) return 0.0;
  const double rz = std::abs(z);
  Complex value;
  double scale = 0.0;
  if (rz > 1.0) {
    const Complex w = 1.0 / z;
    const double rw = 1.0 / rz;
    value = horner_reversed(a, w);
    for (const Complex& c : a) scale = scale * rw + std::abs(c);
  } else {
    value = horner(a, z);
    for (auto it = a.rbegin(); it != a.rend(); ++it) scale = scale * rz + std::abs(*it);
  }
  if (scale == 0.0) return 0.0;
  return std::abs(value) / scale;
}

Complex newton_correction(const Polynomial& p, Complex z) {
  const auto& a = p.coeffs();
  if (a.size() < 2) return {};
  const std::size_t n = a.size() - 1;
  if (std::abs(z) > 1.0) {
    // P(z) = z^n Q(1/z)  =>  P/P' = z Q / (n Q - w Q').
    const Complex w = 1.0 / z;
    Complex q{}, dq{};
    for (const Complex& c : a) {
      dq = dq * w + q;
      q = q * w + c;
    }
    return z * q / (static_cast<double>(n) * q - w * dq);
  }
  Complex v{}, dv{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dv = dv * z + v;
    v = v * z + *it;
  }
  return v / dv;
}

Polynomial from_roots(std::span<const Complex> roots, Complex leading) {
  if (leading == Complex{}) throw InvalidInput("from_roots: leading coefficient is zero");
  std::vector<Complex> c{leading};
  c.reserve(roots.size() + 1);
  for (const Complex& root : roots) {
    if (!is_finite(root)) throw InvalidInput("from_roots: root is not finite");
    // multiply by (z - root)
    c.push_back(Complex{});
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - root * c[j];
    c[0] = -root * c[0];
  }
  return Polynomial(std::move(c));
}

std::size_t sign_changes(std::span<const double> coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (double c : coeffs) {
    const int s = (c > 0.0) - (c < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<double> real_coeffs(const Polynomial& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (const Complex& c : p.coeffs()) out.push_back(c.real());
  return out;
}

RealnessReport check_realness(const Polynomial& p, double tolerance) {
  RealnessReport report;
  for (const Complex& c : p.coeffs()) report.max_imag = std::max(report.max_imag, std::abs(c.imag()));
  report.is_real = report.max_imag <= tolerance;
  return report;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (std::size_t j = p.size(); j-- > 0;) {
    const Complex c = p[j];
    if (c == Complex{}) continue;
    if (!first) os << " + ";
    first = false;
    if (c.imag() == 0.0) {
      os << c.real();
    } else {
      os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
    if (j == 1) os << "*z";
    if (j > 1) os << "*z^" << j;
  }
  return os.str();
}

}  // namespace raysec
