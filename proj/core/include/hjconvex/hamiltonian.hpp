#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hjc {

enum class HamiltonianKind { power, linear, table, custom };

/// A Hamiltonian H : [0, inf) -> R of the radial variable p = |grad u|.
///
/// Structural conditions are tracked as flags: h1 (H(0) = 0), h2
/// (nondecreasing and convex), h3 (superlinear growth).
class Hamiltonian {
 public:
  /// H(p) = p^alpha / alpha, alpha > 1.
  static Hamiltonian power(double alpha);
  /// H(p) = p.
  static Hamiltonian linear();
  /// Piecewise-linear interpolation of (p, H) knots, defined on
  /// [0, last knot]; knots must start at p = 0 and increase.
  static Hamiltonian table(std::vector<std::pair<double, double>> knots);
  /// Arbitrary H known on [0, domain_max]. A slope_limit s declares that H
  /// grows like s p at infinity, so its conjugate is +inf beyond s.
  static Hamiltonian custom(std::function<double(double)> f, std::string label,
                            double domain_max, std::optional<double> slope_limit = std::nullopt,
                            bool superlinear = false);

  double operator()(double p) const;

  HamiltonianKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  const std::string& label() const { return label_; }
  std::optional<double> domain_max() const { return domain_max_; }
  std::optional<double> slope_limit() const { return slope_limit_; }
  bool h1() const { return h1_; }
  bool h2() const { return h2_; }
  bool h3() const { return h3_; }

 private:
  HamiltonianKind kind_ = HamiltonianKind::custom;
  double alpha_ = 0.0;
  std::string label_;
  std::function<double(double)> f_;
  std::optional<double> domain_max_;
  std::optional<double> slope_limit_;
  bool h1_ = false, h2_ = false, h3_ = false;
  void classify();
};

struct LegendreOptions {
  int grid_size = 4096;  // N_L
  double p_max = 100.0;
  /// Use the numeric conjugate even when a closed form is known.
  bool force_numeric = false;
};

/// L(v) = sup_{p >= 0} (p v - H(p)) on v >= 0.
///
/// Closed forms: power alpha gives v^beta / beta with beta = alpha/(alpha-1);
/// linear gives 0 on [0, 1] and +inf beyond. Otherwise the sup is taken over
/// a uniform p-grid (binary search on cell slopes when H is convex) and
/// refined by golden-section search in the neighbouring cells.
class Lagrangian {
 public:
  enum class Form { power, linear, numeric };

  double operator()(double v) const;
  /// Maximizing momentum for v.
  double argmax(double v) const;

  Form form() const;
  double beta() const;
  /// Speed beyond which L is +inf, if any.
  std::optional<double> speed_limit() const;
  /// Width of one table cell, h_L.
  double cell() const;
  /// Largest speed the numeric table resolves (infinite for closed forms).
  double v_max() const;
  const Hamiltonian& hamiltonian() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  friend Lagrangian legendre(const Hamiltonian&, const LegendreOptions&);
};

Lagrangian legendre(const Hamiltonian& H, const LegendreOptions& opt = {});

/// V = sup{v : L(v)/v <= K} plus a safety margin of 10 h_L, found by
/// doubling and bisection.
double speed_bound(const Lagrangian& L, double K);

/// Maximizes a concave function on [a, b] by golden-section search.
std::pair<double, double> golden_section_max(const std::function<double(double)>& g, double a,
                                             double b, double tol = 1e-10);

}  // namespace hjc
