#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pps/elements.hpp"
#include "pps/fock.hpp"
#include "pps/graded_graph.hpp"
#include "pps/toeplitz.hpp"

namespace pps::testing {

GradedSystem load_fixture(const std::string& file);

GradedSystem square_table();
GradedSystem square_free(std::size_t cap = 4);
GradedSystem cc_bimodule(std::size_t cap = 2);
GradedSystem single_loop(std::size_t cap);
GradedSystem edgeless(std::size_t vertices, std::size_t cap = 2);

ArrowId A(const GradedSystem& sys, const std::string& name);
VertexId V(const GradedSystem& sys, const std::string& name);
IdealMask mask(const GradedSystem& sys, const std::vector<std::string>& names);

/// Seeded generator of small free systems and random algebra elements.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  /// ≤ 6 vertices, ≤ 8 generators of degree 1–3, cap ≤ 8, at most max_arrows arrows.
  GradedSystem free_system(std::size_t max_arrows = 60);
  /// Small non-zero Gaussian rational.
  Scalar scalar();
  ArrowId arrow(const GradedSystem& sys, std::size_t max_degree);
  /// A generator T[α,β] with s(α) = s(β) and both degrees ≤ max_degree.
  Generator generator(const GradedSystem& sys, std::size_t max_degree);
  ToeplitzElement element(const GradedSystem& sys, std::size_t max_degree, std::size_t terms);
  Element module_element(const GradedSystem& sys, std::size_t degree, std::size_t terms);
  /// Disjoint directed cycles of degree-1 edges plus isolated vertices; these
  /// always extend to Fell bundles.
  GradedSystem cycles(std::size_t max_cap = 6);
  /// Random x_0 ⊕ … ⊕ x_top.  With `hidden_zero` every entry pairs arrows of
  /// different sources, so the element acts as zero although its blocks are not.
  FixedPointElement fixed_point(const GradedSystem& sys, std::size_t top, std::size_t terms,
                                bool hidden_zero = false);

 private:
  std::mt19937_64 rng_;
};

/// Σ c·S(δ_α)S(δ_β)* built from creation operators: an oracle for evaluate_on_fock.
SparseMatrix fock_via_creations(const GradedSystem& sys, const ToeplitzElement& x, std::size_t N);

}  // namespace pps::testing
