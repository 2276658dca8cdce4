#include "toricslope/symbols.hpp"

#include <algorithm>

namespace toricslope {

Rational d4(const ExponentPair& i, const ExponentPair& j, const ExponentPair& k, const ExponentPair& l) {
  const std::int64_t sum = d3(i, j, k) + d3(j, k, l) + d3(k, l, i) + d3(l, i, j);
  const bool repeated = i == j || i == k || i == l || j == k || j == l || k == l;
  return repeated ? Rational(sum, 2) : Rational(sum);
}

std::size_t selection_candidate_count(std::size_t m) {
  const std::size_t c4 = m < 4 ? 0 : m * (m - 1) * (m - 2) * (m - 3) / 24;
  const std::size_t c3 = m < 3 ? 0 : m * (m - 1) * (m - 2) / 6;
  return c4 + 3 * c3;
}

std::vector<IndexSelection> enumerate_selections(std::span<const ExponentPair> members) {
  std::vector<IndexSelection> out;
  const std::size_t m = members.size();

  auto emit = [&](std::array<std::size_t, 4> idx) {
    std::sort(idx.begin(), idx.end());
    const auto& a = members[idx[0]];
    const auto& b = members[idx[1]];
    const auto& c = members[idx[2]];
    const auto& e = members[idx[3]];
    Rational weight = d4(a, b, c, e);
    if (weight == 0) return;
    out.push_back({idx, std::move(weight), a.x() + b.x() + c.x() + e.x(), a.y() + b.y() + c.y() + e.y()});
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) emit({i, j, k, l});
        emit({i, i, j, k});
        emit({i, j, j, k});
        emit({i, j, k, k});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IndexSelection& x, const IndexSelection& y) { return x.indices < y.indices; });
  return out;
}

}  // namespace toricslope
