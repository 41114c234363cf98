#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pps/elements.hpp"
#include "pps/graded_graph.hpp"
#include "pps/sparse.hpp"

namespace pps {

/// ⊕_{k ≤ N} E_k.  Because arrows are numbered in (degree, name) order the
/// basis is a prefix of the arrow list and basis index = ArrowId.
class TruncatedFock {
 public:
  TruncatedFock(const GradedSystem& sys, std::size_t N);  // throws CapExceeded

  [[nodiscard]] std::size_t truncation() const { return N_; }
  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::span<const ArrowId> block(std::size_t k) const;
  [[nodiscard]] const GradedSystem& system() const { return *sys_; }

 private:
  const GradedSystem* sys_;
  std::size_t N_;
  std::size_t dimension_;
};

/// A vector of the truncated Fock module, keyed by arrow index.
using FockVector = SparseVector;

FockVector basis_vector(ArrowId a);
FockVector to_fock(const Element& x);
std::string to_string(const GradedSystem& sys, const FockVector& v);

/// Degree-homogeneous operator on the truncated Fock module: the block for
/// source degree k maps E_k into E_{k+shift}.  Blocks are stored as matrices
/// over the full Fock basis so composition is plain matrix multiplication.
class BlockMap {
 public:
  BlockMap(std::size_t N, std::size_t dimension, long shift)
      : N_(N), dimension_(dimension), shift_(shift) {}

  [[nodiscard]] long shift() const { return shift_; }
  [[nodiscard]] std::size_t truncation() const { return N_; }
  [[nodiscard]] const std::map<std::size_t, SparseMatrix>& blocks() const { return blocks_; }
  /// Zero matrix when the block is absent.
  [[nodiscard]] SparseMatrix block(std::size_t k) const;

  void add(std::size_t source_degree, ArrowId row, ArrowId col, const Scalar& value);

  [[nodiscard]] FockVector apply(const FockVector& v) const;
  [[nodiscard]] BlockMap adjoint() const;
  /// Keeps source degrees ≤ max_degree.
  [[nodiscard]] BlockMap restrict_source(std::size_t max_degree) const;
  [[nodiscard]] SparseMatrix to_matrix() const;

  /// (a ∘ b); shifts add.
  friend BlockMap operator*(const BlockMap& a, const BlockMap& b);
  /// Same shift, same blocks (zero blocks are never stored).
  friend bool operator==(const BlockMap& a, const BlockMap& b);

 private:
  std::size_t N_;
  std::size_t dimension_;
  long shift_;
  std::map<std::size_t, SparseMatrix> blocks_;
};

/// S_n(x) on source degrees ≤ N − n.  Throws CapExceeded.
BlockMap creation_operator(const GradedSystem& sys, std::size_t N, const Element& x);

/// S_0(a): the left action of ℂ^V on every degree ≤ N.
BlockMap left_action_operator(const GradedSystem& sys, std::size_t N, const VertexFunction& a);

struct WeakRepFailure {
  int condition = 0;  // 1: S_n(x)S_m(y) = S_{n+m}(xy); 2: S_n(x)*S_n(y) = S_0(⟨x|y⟩)
  ArrowId x{};
  ArrowId y{};
  ArrowId basis{};
  FockVector lhs;
  FockVector rhs;
};

struct WeakRepReport {
  bool ok = true;
  std::size_t truncation = 0;
  std::optional<WeakRepFailure> failure;
};

/// Exhaustive check on basis elements for all degrees ≤ N.  Throws
/// InvalidSystem, CapExceeded.
WeakRepReport check_weak_representation(const GradedSystem& sys, std::size_t N);

struct RepWitness {
  std::size_t n = 0;
  std::size_t m = 0;
  ArrowId x{};
  ArrowId y{};
  std::size_t k = 0;
  ArrowId basis{};
  FockVector lhs;  // S_n(x)* S_m(y) δ_basis
  FockVector rhs;  // S_{m−n}(S_n(x)* y) δ_basis
};

struct RepConditionVerdict {
  bool ok = true;
  std::size_t truncation = 0;
  std::optional<RepWitness> witness;
};

/// S_n(x)*S_m(y) = S_{m−n}(S_n(x)*y) for basis x ∈ E_n, y ∈ E_m, 0 < n < m,
/// on every basis vector of degree k with k + m ≤ N.  The witness is the first
/// failure in the scan order (n, m, x, y, k, basis).  Throws InvalidSystem,
/// CapExceeded.
RepConditionVerdict check_representation_condition(const GradedSystem& sys, std::size_t N);

}  // namespace pps
