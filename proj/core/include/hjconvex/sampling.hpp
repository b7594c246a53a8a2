#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hjconvex/field.hpp"
#include "hjconvex/space.hpp"

namespace hjc {

/// Index pairs i < j over n samples: every pair when n(n-1)/2 fits the
/// budget, otherwise `budget` seeded random pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t n,
                                                                     std::size_t budget,
                                                                     std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n < 2) return out;
  const std::size_t all = n * (n - 1) / 2;
  if (all <= budget) {
    out.reserve(all);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  out.reserve(budget);
  while (out.size() < budget) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    out.emplace_back(i, j);
  }
  return out;
}

/// Index k-tuples: exhaustive when n^k fits the budget, else seeded random.
template <std::size_t K>
std::vector<std::array<std::size_t, K>> select_tuples(std::size_t n, std::size_t budget,
                                                      std::uint64_t seed) {
  std::vector<std::array<std::size_t, K>> out;
  if (n == 0) return out;
  double total = 1.0;
  for (std::size_t k = 0; k < K; ++k) total *= static_cast<double>(n);
  if (total <= static_cast<double>(budget)) {
    std::array<std::size_t, K> cur{};
    while (true) {
      out.push_back(cur);
      std::size_t k = K;
      while (k > 0) {
        --k;
        if (++cur[k] < n) break;
        cur[k] = 0;
        if (k == 0) return out;
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  out.resize(budget);
  for (auto& t : out)
    for (auto& v : t) v = pick(rng);
  return out;
}

/// Caches an expensive evaluator; safe to share between threads.
template <class P>
FieldView<P> memoize(FieldView<P> f) {
  struct Cache {
    std::mutex mu;
    std::map<P, double> values;
  };
  auto cache = std::make_shared<Cache>();
  auto inner = f.eval;
  f.eval = [cache, inner](const P& p) {
    {
      std::lock_guard<std::mutex> lock(cache->mu);
      auto it = cache->values.find(p);
      if (it != cache->values.end()) return it->second;
    }
    const double v = inner(p);
    std::lock_guard<std::mutex> lock(cache->mu);
    cache->values.emplace(p, v);
    return v;
  };
  return f;
}

}  // namespace hjc
