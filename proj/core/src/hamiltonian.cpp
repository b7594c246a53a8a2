#include "hjconvex/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hjconvex/error.hpp"

namespace hjc {
namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kClosedFormCell = 1.0 / 4096.0;
}  // namespace

Hamiltonian Hamiltonian::power(double alpha) {
  if (!(alpha > 1.0)) throw DomainError("power Hamiltonian needs alpha > 1");
  Hamiltonian H;
  H.kind_ = HamiltonianKind::power;
  H.alpha_ = alpha;
  H.label_ = "power(" + std::to_string(alpha) + ")";
  H.f_ = [alpha](double p) { return std::pow(p, alpha) / alpha; };
  H.h1_ = H.h2_ = H.h3_ = true;
  return H;
}

Hamiltonian Hamiltonian::linear() {
  Hamiltonian H;
  H.kind_ = HamiltonianKind::linear;
  H.label_ = "linear";
  H.f_ = [](double p) { return p; };
  H.slope_limit_ = 1.0;
  H.h1_ = H.h2_ = true;
  return H;
}

Hamiltonian Hamiltonian::table(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw DomainError("table Hamiltonian needs at least two knots");
  if (knots.front().first != 0.0) throw DomainError("table Hamiltonian must start at p = 0");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i].first > knots[i - 1].first))
      throw DomainError("table Hamiltonian knots must increase in p");
  Hamiltonian H;
  H.kind_ = HamiltonianKind::table;
  H.label_ = "table";
  H.domain_max_ = knots.back().first;
  H.f_ = [k = std::move(knots)](double p) {
    if (p <= k.front().first) return k.front().second;
    auto it = std::upper_bound(k.begin(), k.end(), p,
                               [](double v, const auto& kn) { return v < kn.first; });
    if (it == k.end()) return k.back().second;
    const auto& b = *it;
    const auto& a = *(it - 1);
    return a.second + (b.second - a.second) * (p - a.first) / (b.first - a.first);
  };
  H.classify();
  return H;
}

Hamiltonian Hamiltonian::custom(std::function<double(double)> f, std::string label,
                                double domain_max, std::optional<double> slope_limit,
                                bool superlinear) {
  if (!(domain_max > 0.0)) throw DomainError("custom Hamiltonian needs a positive domain");
  Hamiltonian H;
  H.kind_ = HamiltonianKind::custom;
  H.label_ = std::move(label);
  H.f_ = std::move(f);
  H.domain_max_ = domain_max;
  H.slope_limit_ = slope_limit;
  H.classify();
  H.h3_ = superlinear;
  return H;
}

void Hamiltonian::classify() {
  h1_ = std::abs(f_(0.0)) <= 1e-12;
  const double P = domain_max_.value_or(100.0);
  const int n = 2048;
  h2_ = true;
  double prev = f_(0.0), prev_slope = -kInf;
  for (int i = 1; i <= n && h2_; ++i) {
    const double cur = f_(P * i / n);
    const double slope = (cur - prev) * n / P;
    if (slope < -1e-10 || slope < prev_slope - 1e-8 * std::max(1.0, std::abs(prev_slope)))
      h2_ = false;
    prev = cur;
    prev_slope = slope;
  }
  h3_ = false;
}

double Hamiltonian::operator()(double p) const {
  if (p < 0.0) throw DomainError("Hamiltonian argument must be >= 0");
  return f_(p);
}

std::pair<double, double> golden_section_max(const std::function<double(double)>& g, double a,
                                             double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > tol) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - invphi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + invphi * (b - a);
      gd = g(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, g(x)};
}

struct Lagrangian::Impl {
  Hamiltonian H;
  Form form;
  double beta = 0.0;
  int n = 0;
  double P = 0.0, dp = 0.0;
  std::vector<double> Hgrid;
  bool convex = false;
  double vmax = kInf;
  double cell = kClosedFormCell;

  // Returns {argmax, value}.
  std::pair<double, double> numeric(double v) const {
    if (v < 0.0) throw DomainError("Lagrangian argument must be >= 0");
    if (auto s = H.slope_limit(); s && v > *s * (1.0 + 1e-12)) return {kInf, kInf};
    std::size_t best = 0;
    if (convex) {
      // Largest i whose left cell slope is <= v.
      std::size_t lo = 0, hi = Hgrid.size() - 1;
      while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if ((Hgrid[mid] - Hgrid[mid - 1]) / dp <= v) lo = mid;
        else hi = mid - 1;
      }
      best = lo;
    } else {
      double bv = -kInf;
      for (std::size_t i = 0; i < Hgrid.size(); ++i) {
        const double g = i * dp * v - Hgrid[i];
        if (g > bv) {
          bv = g;
          best = i;
        }
      }
    }
    const std::size_t last = Hgrid.size() - 1;
    if (best == last && !H.slope_limit()) {
      const double last_slope = (Hgrid[last] - Hgrid[last - 1]) / dp;
      if (v > last_slope + 1e-12 * std::max(1.0, v))
        throw TruncationError("Legendre sup reaches p_max = " + std::to_string(P) +
                              " at v = " + std::to_string(v) +
                              "; L(v) >= " + std::to_string(P * v - Hgrid[last]));
    }
    const double pg = best * dp;
    double val = pg * v - Hgrid[best];
    double arg = pg;
    const double a = best == 0 ? 0.0 : pg - dp;
    const double b = best == last ? P : pg + dp;
    if (b > a) {
      auto [pr, gr] = golden_section_max([&](double p) { return p * v - H(p); }, a, b);
      if (gr > val) {
        val = gr;
        arg = pr;
      }
    }
    return {arg, val};
  }
};

Lagrangian legendre(const Hamiltonian& H, const LegendreOptions& opt) {
  if (!H.h1()) throw DomainError("Legendre transform needs H(0) = 0");
  auto impl = std::make_shared<Lagrangian::Impl>();
  impl->H = H;
  if (!opt.force_numeric && H.kind() == HamiltonianKind::power) {
    impl->form = Lagrangian::Form::power;
    impl->beta = H.alpha() / (H.alpha() - 1.0);
  } else if (!opt.force_numeric && H.kind() == HamiltonianKind::linear) {
    impl->form = Lagrangian::Form::linear;
  } else {
    if (opt.grid_size < 3) throw DomainError("Legendre grid needs at least 3 points");
    impl->form = Lagrangian::Form::numeric;
    impl->n = opt.grid_size;
    impl->P = std::min(opt.p_max, H.domain_max().value_or(opt.p_max));
    impl->dp = impl->P / (opt.grid_size - 1);
    impl->Hgrid.resize(opt.grid_size);
    for (int i = 0; i < opt.grid_size; ++i) impl->Hgrid[i] = H(i * impl->dp);
    impl->convex = H.h2();
    const int l = opt.grid_size - 1;
    impl->vmax = H.slope_limit() ? *H.slope_limit()
                                 : (impl->Hgrid[l] - impl->Hgrid[l - 1]) / impl->dp;
    impl->cell = impl->vmax / opt.grid_size;
  }
  Lagrangian L;
  L.impl_ = std::move(impl);
  return L;
}

double Lagrangian::operator()(double v) const {
  if (v < 0.0) throw DomainError("Lagrangian argument must be >= 0");
  switch (impl_->form) {
    case Form::power: return std::pow(v, impl_->beta) / impl_->beta;
    case Form::linear: return v <= 1.0 ? 0.0 : kInf;
    case Form::numeric: return impl_->numeric(v).second;
  }
  return kInf;
}

double Lagrangian::argmax(double v) const {
  switch (impl_->form) {
    case Form::power: return std::pow(v, impl_->beta - 1.0);
    case Form::linear: return v < 1.0 ? 0.0 : (v == 1.0 ? 0.0 : kInf);
    case Form::numeric: return impl_->numeric(v).first;
  }
  return kInf;
}

Lagrangian::Form Lagrangian::form() const { return impl_->form; }
double Lagrangian::beta() const { return impl_->beta; }
std::optional<double> Lagrangian::speed_limit() const {
  if (impl_->form == Form::linear) return 1.0;
  if (impl_->form == Form::numeric) return impl_->H.slope_limit();
  return std::nullopt;
}
double Lagrangian::cell() const { return impl_->cell; }
double Lagrangian::v_max() const { return impl_->vmax; }
const Hamiltonian& Lagrangian::hamiltonian() const { return impl_->H; }

double speed_bound(const Lagrangian& L, double K) {
  if (!(K >= 0.0)) throw DomainError("Lipschitz constant must be >= 0");
  auto ok = [&](double v) { return L(v) <= K * v; };
  double lo = 0.0, hi = 1.0;
  while (ok(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw UnboundedSpeedError("L(v)/v stays below K; propagation speed unbounded");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo + 10.0 * L.cell();
}

}  // namespace hjc
