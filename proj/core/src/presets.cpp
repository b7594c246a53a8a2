#include "hjconvex/presets.hpp"

#include <cmath>
#include <random>

#include "hjconvex/error.hpp"

namespace hjc {
namespace {

[[noreturn]] void unknown(const std::string& space, const std::string& name) {
  throw DomainError("unknown initial datum '" + name + "' for space " + space);
}

template <class P>
InitialDatum<P> constant(double c) {
  return {[c](const P&) { return c; }, 0.0, "constant"};
}

std::mt19937_64 family_rng(const PresetSpec& p) {
  std::seed_seq seq{static_cast<std::uint32_t>(p.seed), static_cast<std::uint32_t>(p.seed >> 32),
                    static_cast<std::uint32_t>(p.index)};
  return std::mt19937_64(seq);
}

// Random convex function of one real variable with Lipschitz constant 1:
// a weighted mix of |s - c|, a linear term, a max of affine pieces and the
// smooth s -> sqrt(1 + (s - c)^2).
std::function<double(double)> convex_1d(const PresetSpec& p, double lo, double hi) {
  auto rng = family_rng(p);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  auto in = [&](double a, double b) { return a + (b - a) * U(rng); };
  const double c1 = in(lo, hi), c2 = in(lo, hi);
  const double wa = U(rng), wl = in(-1.0, 1.0), wm = U(rng), ws = U(rng);
  const double g1 = in(-1.0, 1.0), g2 = in(-1.0, 1.0), b1 = in(-1.0, 1.0), b2 = in(-1.0, 1.0);
  const double K = wa + std::abs(wl) + wm * std::max(std::abs(g1), std::abs(g2)) + ws;
  const double scale = K > 0.0 ? 1.0 / K : 0.0;
  return [=](double s) {
    const double v = wa * std::abs(s - c1) + wl * s + wm * std::max(g1 * s + b1, g2 * s + b2) +
                     ws * std::sqrt(1.0 + (s - c2) * (s - c2));
    return scale * v;
  };
}

}  // namespace

double quadrant_product(const LatticePoint& p) {
  if (p.x1 < Dyadic(0) || p.x2 < Dyadic(0)) return 0.0;
  return (p.x1 + Dyadic(1)).to_double() * p.x2.to_double();
}

InitialDatum<EuclideanPoint> make_preset(const EuclideanSpace& s, const PresetSpec& p) {
  using P = EuclideanPoint;
  const int dim = s.dim();
  if (p.name == "constant") return constant<P>(p.value);
  if (p.name == "norm")
    return {[s](const P& x) { return s.norm(x); }, 1.0, "norm"};
  if (p.name == "neg-norm")
    return {[s](const P& x) { return -s.norm(x); }, 1.0, "neg-norm"};
  if (p.name == "linear")
    return {[](const P& x) { return x[0]; }, 1.0, "linear"};
  if (p.name == "quadratic") {
    // Lipschitz constant 2 R in the l2 sense on the ball of radius R.
    return {[dim](const P& x) {
              double v = 0.0;
              for (int i = 0; i < dim; ++i) v += x[i] * x[i];
              return v;
            },
            2.0 * p.radius, "quadratic"};
  }
  if (p.name == "convex-family") {
    auto rng = family_rng(p);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const int kind = p.index % 4;
    std::array<double, 4> c1{}, c2{}, w{}, g1{}, g2{};
    for (int i = 0; i < dim; ++i) {
      c1[i] = U(rng);
      c2[i] = U(rng);
      w[i] = U(rng);
      g1[i] = U(rng);
      g2[i] = U(rng);
    }
    const double b1 = U(rng), b2 = U(rng);
    auto l1 = [dim](const std::array<double, 4>& v) {
      double n = 0.0;
      for (int i = 0; i < dim; ++i) n += std::abs(v[i]);
      return n;
    };
    // The l1 norm of a covector bounds its dual norm for every p >= 1.
    double K = 1.0;
    switch (kind) {
      case 0: K = 2.0; break;
      case 1: K = std::max(l1(g1), l1(g2)); break;
      case 2: K = 1.0 + l1(w); break;
      default: K = 1.0; break;
    }
    if (!(K > 0.0)) K = 1.0;
    const double scale = 1.0 / K;
    auto f = [=](const P& x) {
      P d1 = x, d2 = x;
      double lin = 0.0, a1 = b1, a2 = b2;
      for (int i = 0; i < dim; ++i) {
        d1[i] -= c1[i];
        d2[i] -= c2[i];
        lin += w[i] * x[i];
        a1 += g1[i] * x[i];
        a2 += g2[i] * x[i];
      }
      double v = 0.0;
      switch (kind) {
        case 0: v = s.norm(d1) + s.norm(d2); break;
        case 1: v = std::max(a1, a2); break;
        case 2: v = s.norm(d1) + lin; break;
        default: v = std::sqrt(1.0 + s.norm(d1) * s.norm(d1)); break;
      }
      return scale * v;
    };
    return {f, 1.0, "convex-family[" + std::to_string(p.index) + "]"};
  }
  unknown(s.name(), p.name);
}

InitialDatum<HalfLinePoint> make_preset(const HalfLine& s, const PresetSpec& p) {
  using P = HalfLinePoint;
  if (p.name == "constant") return constant<P>(p.value);
  if (p.name == "neg-x") return {[](const P& x) { return -x.x; }, 1.0, "neg-x"};
  if (p.name == "x") return {[](const P& x) { return x.x; }, 1.0, "x"};
  if (p.name == "convex-family") {
    auto g = convex_1d(p, 0.0, s.upper());
    return {[g](const P& x) { return g(x.x); }, 1.0,
            "convex-family[" + std::to_string(p.index) + "]"};
  }
  unknown(s.name(), p.name);
}

InitialDatum<CylinderPoint> make_preset(const Cylinder& s, const PresetSpec& p) {
  using P = CylinderPoint;
  if (p.name == "constant") return constant<P>(p.value);
  if (p.name == "height") return {[](const P& x) { return x.height; }, 1.0, "height"};
  if (p.name == "neg-height") return {[](const P& x) { return -x.height; }, 1.0, "neg-height"};
  if (p.name == "convex-family") {
    // Convex functions on the cylinder are constant on every closed
    // circle, so the family is convex in the height alone.
    auto g = convex_1d(p, -1.0, 1.0);
    return {[g](const P& x) { return g(x.height); }, 1.0,
            "convex-family[" + std::to_string(p.index) + "]"};
  }
  unknown(s.name(), p.name);
}

InitialDatum<LatticePoint> make_preset(const Lattice2& s, const PresetSpec& p) {
  using P = LatticePoint;
  if (p.name == "constant") return constant<P>(p.value);
  if (p.name == "norm")
    return {[](const P& x) { return (x.x1.abs() + x.x2.abs()).to_double(); }, 1.0, "norm"};
  if (p.name == "neg-norm")
    return {[](const P& x) { return -(x.x1.abs() + x.x2.abs()).to_double(); }, 1.0, "neg-norm"};
  if (p.name == "quadrant-product")
    // Jumps by x2 across x1 = 0, so no Lipschitz constant is declared.
    return {[](const P& x) { return quadrant_product(x); }, std::nullopt, "quadrant-product"};
  unknown(s.name(), p.name);
}

InitialDatum<TreePoint> make_preset(const MetricTree& s, const PresetSpec& p) {
  using P = TreePoint;
  if (p.name == "constant") return constant<P>(p.value);
  if (p.name == "distance-to-center") {
    const P c = s.vertex(0);
    return {[s, c](const P& x) { return s.distance(c, x); }, 1.0, "distance-to-center"};
  }
  if (p.name == "cross-example") {
    if (s.name() != "cross") throw DomainError("cross-example needs the cross space");
    return {[s](const P& x) { return -s.cross_coordinates(x).first; }, 1.0, "cross-example"};
  }
  if (p.name == "convex-family") {
    // Positive combinations and maxima of distance functions, and the
    // Busemann function of an edge ray, are convex on trees.
    auto rng = family_rng(p);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const auto& E = s.edges();
    auto random_point = [&] {
      const int e = static_cast<int>(U(rng) * static_cast<double>(E.size())) % static_cast<int>(E.size());
      return s.make(e, U(rng) * E[e].length);
    };
    const int kind = p.index % 3;
    const P c1 = random_point(), c2 = random_point();
    const double a1 = U(rng), a2 = U(rng), b = U(rng) - 0.5;
    const int ray = static_cast<int>(U(rng) * static_cast<double>(E.size())) % static_cast<int>(E.size());
    const P root = s.vertex(0);
    std::function<double(const P&)> f;
    switch (kind) {
      case 0:
        f = [=](const P& x) { return (a1 * s.distance(c1, x) + a2 * s.distance(c2, x)) / (a1 + a2); };
        break;
      case 1:
        f = [=](const P& x) { return std::max(s.distance(c1, x), s.distance(c2, x) + b); };
        break;
      default:
        // Busemann function of the ray leaving vertex 0 along edge `ray`:
        // -s on that edge at offset s from vertex 0, +d(x, 0) elsewhere.
        f = [=](const P& x) {
          const double d = s.distance(root, x);
          if (x.edge == ray && s.distance(root, x) > 0.0 && E[ray].u == 0) return -d;
          return d;
        };
        break;
    }
    return {f, 1.0, "convex-family[" + std::to_string(p.index) + "]"};
  }
  unknown(s.name(), p.name);
}

std::vector<std::string> preset_names(const std::string& kind) {
  if (kind == "euclidean") return {"constant", "norm", "neg-norm", "linear", "quadratic", "convex-family"};
  if (kind == "halfline") return {"constant", "neg-x", "x", "convex-family"};
  if (kind == "cylinder") return {"constant", "height", "neg-height", "convex-family"};
  if (kind == "lattice") return {"constant", "norm", "neg-norm", "quadrant-product"};
  if (kind == "cross") return {"constant", "distance-to-center", "cross-example", "convex-family"};
  if (kind == "tree" || kind == "star") return {"constant", "distance-to-center", "convex-family"};
  return {};
}

}  // namespace hjc
