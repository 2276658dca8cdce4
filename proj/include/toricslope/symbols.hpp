#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "toricslope/diagram.hpp"
#include "toricslope/rational.hpp"

namespace toricslope {

using ExponentPair = LatticePoint;

/// [AB] = p_A r_B - p_B r_A.
template <typename DA, typename DB>
typename DA::Scalar bracket(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a.x() * b.y() - b.x() * a.y();
}

/// (ijkl) = (p_i r_k - p_k r_i)(p_i - p_j)(r_k - r_l): the coefficient of one
/// term in the lowest-order expansion of the squared Kähler form.
template <typename DI, typename DJ, typename DK, typename DL>
typename DI::Scalar symbol_ijkl(const Eigen::MatrixBase<DI>& i, const Eigen::MatrixBase<DJ>& j,
                                const Eigen::MatrixBase<DK>& k, const Eigen::MatrixBase<DL>& l) {
  return bracket(i, k) * (i.x() - j.x()) * (k.y() - l.y());
}

/// ([ij] - [ik] + [jk])^2, the squared doubled area of the triangle ijk.
template <typename DI, typename DJ, typename DK>
typename DI::Scalar d3(const Eigen::MatrixBase<DI>& i, const Eigen::MatrixBase<DJ>& j,
                       const Eigen::MatrixBase<DK>& k) {
  const auto s = bracket(i, j) - bracket(i, k) + bracket(j, k);
  return s * s;
}

/// Sum of D3 over the four cyclic triples, halved when two of the four
/// exponent pairs coincide (so D4(i,j,k,k) = D3(i,j,k)).
Rational d4(const ExponentPair& i, const ExponentPair& j, const ExponentPair& k, const ExponentPair& l);

/// Unordered multiset {i,j,k,l} of face-member positions with at least three
/// distinct entries and a nonzero D4 weight.
struct IndexSelection {
  std::array<std::size_t, 4> indices;  ///< sorted ascending
  Rational d4;
  std::int64_t sum_p;
  std::int64_t sum_r;
};

/// Raw candidate count C(m,4) + 3 C(m,3) before zero-weight filtering.
std::size_t selection_candidate_count(std::size_t members);

/// Every multiset of four members with at least three distinct entries,
/// once each, excluding those with D4 = 0. Indices refer to positions in
/// `members`; output is sorted by index tuple.
std::vector<IndexSelection> enumerate_selections(std::span<const ExponentPair> members);

}  // namespace toricslope
