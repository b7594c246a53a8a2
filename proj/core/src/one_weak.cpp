#include "hjconvex/lattice_checks.hpp"

namespace hjc {

bool one_weak_admissible(const LatticePoint& x, const LatticePoint& y) {
  const Dyadic m = min((x.x1 - y.x1).abs(), (x.x2 - y.x2).abs());
  return m == Dyadic(0) || m >= Dyadic(1);
}

LatticePoint constructive_midpoint(const LatticePoint& x, const LatticePoint& y) {
  LatticePoint a = x, b = y;
  bool neg1 = false, neg2 = false, swapped = false;
  if (a.x1 + b.x1 < Dyadic(0)) {
    neg1 = true;
    a.x1 = -a.x1;
    b.x1 = -b.x1;
  }
  if (a.x2 + b.x2 < Dyadic(0)) {
    neg2 = true;
    a.x2 = -a.x2;
    b.x2 = -b.x2;
  }
  if (a.x2 + b.x2 < a.x1 + b.x1) {
    swapped = true;
    std::swap(a.x1, a.x2);
    std::swap(b.x1, b.x2);
  }
  const Dyadic s1 = a.x1 + b.x1, s2 = a.x2 + b.x2;
  const Dyadic h1 = s1.half(), h2 = s2.half();
  const Dyadic e1 = h1.frac(), e2 = h2.frac();
  const Dyadic half = Dyadic::fraction(1, 1);
  LatticePoint z;
  if ((a.x1 - b.x1) * (a.x2 - b.x2) >= Dyadic(0)) {
    if (e1 <= half) z = {h1.floor(), h2 + e1};
    else z = {h1.floor() + Dyadic(1), h2 - Dyadic(1) + e1};
  } else {
    if (e1 <= e2) z = {h1.floor(), h2 - e1};
    else z = {h1 - e2, h2.floor()};
  }
  if (swapped) std::swap(z.x1, z.x2);
  if (neg2) z.x2 = -z.x2;
  if (neg1) z.x1 = -z.x1;
  return z;
}

CheckReport<LatticePoint> check_one_weak_lattice(const Lattice2& space,
                                                 const FieldView<LatticePoint>& f,
                                                 const CheckOptions& opt, bool strong,
                                                 const std::vector<std::pair<LatticePoint, LatticePoint>>& named) {
  std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
  for (const auto& pr : named)
    if (one_weak_admissible(pr.first, pr.second)) pairs.push_back(pr);
  for (auto [i, j] : select_pairs(f.samples.size(), opt.budget, opt.seed))
    if (one_weak_admissible(f.samples[i], f.samples[j]))
      pairs.emplace_back(f.samples[i], f.samples[j]);
  struct Out {
    double margin = 0.0;
    LatticePoint z;
    bool constructive = false;
    bool constructive_ok = true;
    double constructive_margin = 0.0;
  };
  std::vector<Out> res(pairs.size());
  parallel_for(pairs.size(), opt.threads, [&](std::size_t k) {
    const auto& [x, y] = pairs[k];
    const auto mids = space.midpoints(x, y);
    Out o;
    double low = 0.0;
    for (std::size_t m = 0; m < mids.size(); ++m) {
      const double v = 2.0 * f(mids[m]);
      if (m == 0 || (strong ? v > low : v < low)) {
        low = v;
        o.z = mids[m];
      }
    }
    const double fx = f(x), fy = f(y);
    o.margin = fx + fy - low;
    const Dyadic mn = min((x.x1 - y.x1).abs(), (x.x2 - y.x2).abs());
    if (mn >= Dyadic(1)) {
      o.constructive = true;
      const LatticePoint z = constructive_midpoint(x, y);
      o.constructive_ok = Lattice2::on_graph(z) && is_midpoint(space, x, y, z);
      if (o.constructive_ok) o.constructive_margin = fx + fy - 2.0 * f(z);
    }
    res[k] = o;
  });
  CheckReport<LatticePoint> rep;
  rep.notion = strong ? "one-strong-lattice" : "one-weak-lattice";
  rep.tau = opt.tau;
  std::size_t built = 0, misses = 0;
  double worst_built = INFINITY;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    rep.record(res[k].margin, {pairs[k].first, pairs[k].second, res[k].z});
    if (res[k].constructive) {
      ++built;
      if (!res[k].constructive_ok) ++misses;
      else worst_built = std::min(worst_built, res[k].constructive_margin);
    }
  }
  rep.finish();
  rep.skipped =
      named.size() + select_pairs(f.samples.size(), opt.budget, opt.seed).size() - pairs.size();
  rep.details["constructive_pairs"] = built;
  rep.details["construction_misses"] = misses;
  if (std::isfinite(worst_built)) rep.details["constructive_worst_margin"] = worst_built;
  return rep;
}

}  // namespace hjc
