#ifndef NEGMOM_TEST_SUPPORT_HPP
#define NEGMOM_TEST_SUPPORT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "negmom/density_matrix.hpp"
#include "negmom/moments.hpp"
#include "negmom/random_states.hpp"

namespace test_support {

using negmom::DensityMatrix;
using negmom::MomentSequence;
using negmom::StateKind;

inline DensityMatrix bell_state() {
  return negmom::gen_random_state(StateKind::werner, 2, 2, 0, 1.0);
}

inline DensityMatrix max_mixed_2x2() {
  return negmom::gen_random_state(StateKind::werner, 2, 2, 0, 0.0);
}

inline DensityMatrix werner_state(double p) {
  return negmom::gen_random_state(StateKind::werner, 2, 2, 0, p);
}

inline DensityMatrix product_pure_state() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 1.0;
  return DensityMatrix(2, 2, std::move(m));
}

// exact PT spectrum {1/2, 1/2, 1/2, -1/2}
inline MomentSequence bell_moments(int n_max = 5) {
  std::vector<double> all = {1.0, 1.0, 0.25, 0.25, 0.0625};
  all.resize(static_cast<std::size_t>(n_max));
  return MomentSequence(std::move(all));
}

// flat spectrum 1/4 x4: c_k = 4^{1-k}
inline MomentSequence mm2_moments(int n_max = 4) {
  std::vector<double> values;
  double v = 1.0;
  for (int k = 1; k <= n_max; ++k) {
    values.push_back(v);
    v /= 4.0;
  }
  return MomentSequence(std::move(values));
}

// Werner p = 2/3, PT spectrum {5/12 x3, -1/4}
inline MomentSequence werner23_moments(int n_max = 5) {
  std::vector<double> all = {1.0, 7.0 / 12.0, 29.0 / 144.0, 163.0 / 1728.0,
                             761.0 / 20736.0};
  all.resize(static_cast<std::size_t>(n_max));
  return MomentSequence(std::move(all));
}

inline const std::vector<std::pair<int, int>>& test_dims() {
  static const std::vector<std::pair<int, int>> dims = {
      {2, 2}, {2, 3}, {3, 3}, {2, 4}, {4, 4}};
  return dims;
}

// Calls fn(state, kind, seed) for `per_dim` seeds per (kind, dims) pair.
template <typename F>
void for_each_random_state(const std::vector<StateKind>& kinds, int per_dim,
                           F&& fn) {
  std::uint64_t seed = 1;
  for (StateKind kind : kinds)
    for (const auto& [da, db] : test_dims())
      for (int i = 0; i < per_dim; ++i, ++seed)
        fn(negmom::gen_random_state(kind, da, db, seed), kind, seed);
}

}  // namespace test_support

#endif
