#include "hjconvex/hopflax.hpp"

namespace hjc {

ResidualReport residual_check(const std::vector<double>& xs, const std::vector<double>& u_t,
                              const std::vector<double>& u_next, double dt,
                              const Hamiltonian& H, double sign, double kink_tol) {
  if (xs.size() != u_t.size() || xs.size() != u_next.size())
    throw DomainError("residual_check arrays differ in length");
  if (!(dt > 0.0)) throw DomainError("residual_check needs dt > 0");
  ResidualReport rep;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double hl = xs[i] - xs[i - 1], hr = xs[i + 1] - xs[i];
    auto kink = [&](const std::vector<double>& u) {
      const double l = (u[i] - u[i - 1]) / hl, r = (u[i + 1] - u[i]) / hr;
      return std::abs(l - r) > kink_tol;
    };
    if (kink(u_t) || kink(u_next)) {
      ++rep.skipped;
      continue;
    }
    const double l = (u_t[i] - u_t[i - 1]) / hl, r = (u_t[i + 1] - u_t[i]) / hr;
    const double grad = std::max(std::abs(l), std::abs(r));
    const double res = std::abs((u_next[i] - u_t[i]) / dt + sign * H(grad));
    ++rep.tested;
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.at = xs[i];
    }
  }
  return rep;
}

}  // namespace hjc
