#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pps/elements.hpp"
#include "pps/graded_graph.hpp"

namespace pps {

enum class FellCondition {
  Bimodule,  // E_m is not a Hilbert bimodule
  Left,      // ⟨⟨E_n|E_n⟩⟩·E_m ⊄ μ(E_n ⊗ E_{m−n})
  Right,     // E_m·⟨E_n|E_n⟩ ⊄ μ(E_{m−n} ⊗ E_n)
};

std::string_view to_string(FellCondition c);

struct ExtendVerdict {
  bool extendable = true;
  std::size_t n = 0;
  std::size_t m = 0;
  FellCondition condition = FellCondition::Left;
  /// The offending arrow of E_m (for Bimodule: the two clashing arrows of E_m).
  std::vector<ArrowId> arrows;
};

/// Scans m = 1..cap; for each m first the bimodule property of E_m, then
/// n = 1..m with the left condition before the right one, so a witness found
/// at some cap persists at every larger cap.  Throws NotPathCategory.
ExtendVerdict check_extendable(const GradedSystem& sys);

/// Basis vector of the fiber B_{±deg}: an arrow, or the formal adjoint of one.
/// Identities are self-adjoint and always carry star = false.
struct FellBasis {
  ArrowId arrow{};
  bool star = false;

  friend auto operator<=>(const FellBasis&, const FellBasis&) = default;
};

using FellVector = std::map<FellBasis, Scalar>;

class FellBundle {
 public:
  [[nodiscard]] const GradedSystem& system() const { return sys_; }
  [[nodiscard]] std::size_t degree_bound() const { return D_; }
  /// Basis of B_n for |n| ≤ D, in canonical order.
  [[nodiscard]] std::vector<FellBasis> fiber(long n) const;
  [[nodiscard]] std::vector<FellBasis> basis() const;
  [[nodiscard]] long degree(const FellBasis& b) const;
  [[nodiscard]] FellBasis star(const FellBasis& b) const;

  /// Product of basis vectors; empty when zero or when the degree leaves [−D, D].
  [[nodiscard]] FellVector multiply(const FellBasis& x, const FellBasis& y) const;
  [[nodiscard]] FellVector multiply(const FellVector& x, const FellVector& y) const;
  [[nodiscard]] FellVector star(const FellVector& x) const;
  /// Non-zero entries of the product table.
  [[nodiscard]] const std::map<std::pair<FellBasis, FellBasis>, std::pair<FellBasis, Scalar>>&
  table() const {
    return table_;
  }

  [[nodiscard]] std::string name(const FellBasis& b) const;

 private:
  friend FellBundle build_fell(const GradedSystem& sys, std::size_t D);
  FellBundle(GradedSystem sys, std::size_t D) : sys_(std::move(sys)), D_(D) {}

  GradedSystem sys_;
  std::size_t D_;
  std::map<std::pair<FellBasis, FellBasis>, std::pair<FellBasis, Scalar>> table_;
};

/// Throws NotExtendable, CapExceeded.
FellBundle build_fell(const GradedSystem& sys, std::size_t D);

struct FellAxiomReport {
  bool ok = true;
  std::string failed_axiom;
  std::vector<FellBasis> witness;
  std::string detail;
};

/// Associativity, involution, positivity of x*x in B_0, degree additivity and
/// agreement of the non-negative part with the system's composition.
FellAxiomReport verify_fell_axioms(const FellBundle& bundle);

/// ∪_{n ≥ 1} supports of the left inner products of B_n.
IdealMask fell_covariance_ideal(const FellBundle& bundle);

}  // namespace pps
