#pragma once

#include <span>
#include <vector>

namespace wavefront {

/// Dense polynomial with coefficients in ascending order: c[0] + c[1] x + ...
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  double operator()(double x) const noexcept;

  Polynomial derivative() const;
  /// Antiderivative with the given value at x = 0.
  Polynomial antiderivative(double constant = 0.0) const;

  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(double s) const;

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

 private:
  std::vector<double> coeffs_;
};

}  // namespace wavefront
