#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pps/graded_graph.hpp"
#include "pps/scalar.hpp"
#include "pps/sparse.hpp"

namespace pps {

/// T[α,β] = S(δ_α)S(δ_β)*, with s(α) = s(β).
struct Generator {
  ArrowId alpha{};
  ArrowId beta{};

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Gauge degree deg α − deg β.
long gauge_degree(const GradedSystem& sys, const Generator& g);

/// Finite combination of generators; zero coefficients are never stored, so
/// equality of term maps is equality in the algebra.
struct ToeplitzElement {
  std::map<Generator, Scalar> terms;

  void add(const Generator& g, const Scalar& c);
  [[nodiscard]] bool is_zero() const { return terms.empty(); }

  friend bool operator==(const ToeplitzElement&, const ToeplitzElement&) = default;
};

ToeplitzElement operator+(const ToeplitzElement& x, const ToeplitzElement& y);
ToeplitzElement operator-(const ToeplitzElement& x, const ToeplitzElement& y);
ToeplitzElement operator*(const Scalar& c, const ToeplitzElement& x);

/// "2·T[a,v1] + i·T[e,d]"; "0" for the zero element.
std::string to_string(const GradedSystem& sys, const ToeplitzElement& x);

struct GeneratorResult {
  ToeplitzElement element;
  /// s(α) ≠ s(β): the rank-one operator vanishes and the element is zero.
  bool source_mismatch = false;
};

GeneratorResult make_generator(const GradedSystem& sys, ArrowId alpha, ArrowId beta);

/// Multiplication in normal form.  Only defined on path categories, where
///   T[α,β]·T[γ,δ] = T[α·ε, δ]  if γ = β·ε,
///                 = T[α, δ·ε]  if β = γ·ε,
///                 = 0          otherwise.
class ToeplitzAlgebra {
 public:
  /// Throws NotPathCategory.
  explicit ToeplitzAlgebra(const GradedSystem& sys);

  [[nodiscard]] const GradedSystem& system() const { return *sys_; }
  /// Throws CapExceeded when a product leaves the cap.
  [[nodiscard]] ToeplitzElement multiply(const ToeplitzElement& x, const ToeplitzElement& y) const;
  [[nodiscard]] ToeplitzElement multiply(const Generator& g, const Generator& h) const;

 private:
  const GradedSystem* sys_;
};

ToeplitzElement adjoint(const ToeplitzElement& x);

/// Terms of gauge degree k.
ToeplitzElement spectral_project(const GradedSystem& sys, const ToeplitzElement& x, long k);

/// Largest path degree occurring in any term (0 for the zero element).
std::size_t max_path_degree(const GradedSystem& sys, const ToeplitzElement& x);

/// Matrix on the Fock module truncated at N: T[α,β] sends δ_{β·z} to δ_{α·z}
/// whenever both lie in degree ≤ N.  Works for any system.  Throws CapExceeded.
SparseMatrix evaluate_on_fock(const GradedSystem& sys, const ToeplitzElement& x, std::size_t N);

/// Matrix over the arrows of one degree: entry [(e, f)] is the coefficient of |δ_e⟩⟨δ_f|.
using CompactBlock = std::map<std::pair<ArrowId, ArrowId>, Scalar>;

void accumulate(CompactBlock& block, ArrowId row, ArrowId col, const Scalar& value);

/// x_0 ⊕ … ⊕ x_N with x_i ∈ 𝕂(E_i).
struct FixedPointElement {
  std::vector<CompactBlock> blocks;

  [[nodiscard]] std::size_t top_degree() const { return blocks.empty() ? 0 : blocks.size() - 1; }
  [[nodiscard]] ToeplitzElement to_toeplitz(const GradedSystem& sys) const;
};

/// ϑ_j^k(x): |δ_a⟩⟨δ_b| acts on E_k by δ_{b·z} ↦ δ_{a·z}.  Entries with
/// s(a) ≠ s(b) vanish.  Throws DegreeOrder (j > k), CapExceeded, DegreeMismatch.
CompactBlock theta_compress(const GradedSystem& sys, std::size_t j, const CompactBlock& x,
                            std::size_t k);

struct IndependenceReport {
  std::size_t degree_bound = 0;
  std::size_t generators = 0;
  std::size_t rank = 0;

  [[nodiscard]] bool independent() const { return rank == generators; }
};

/// Rank of the Fock images (at N = D) of all generators with path degrees ≤ D.
IndependenceReport generator_independence(const GradedSystem& sys, std::size_t D);

}  // namespace pps
