#pragma once

#include <optional>
#include <vector>

#include "pps/elements.hpp"
#include "pps/graded_graph.hpp"
#include "pps/toeplitz.hpp"

namespace pps {

/// W is invariant when r(e) ∈ W implies s(e) ∈ W for every arrow e.
/// Throws UnknownVertex for a mask outside the vertex set.
bool is_invariant(const GradedSystem& sys, const IdealMask& W);
/// First arrow (canonical order) violating invariance.
std::optional<ArrowId> invariance_witness(const GradedSystem& sys, const IdealMask& W);

inline constexpr std::size_t kDefaultVertexBound = 16;

/// All invariant masks in canonical order.  Throws TooManyVertices.
std::vector<IdealMask> enumerate_invariant(const GradedSystem& sys,
                                           std::size_t bound = kDefaultVertexBound);

/// Arrows with both endpoints in U, with the composition entries among them.
GradedSystem restrict_hereditary(const GradedSystem& sys, const IdealMask& U);

/// Deletes W and every arrow with source in W.  Throws NotInvariant.
GradedSystem quotient(const GradedSystem& sys, const IdealMask& W);

/// K⊥ = { v : some arrow of positive degree has range v }.
IdealMask katsura_ideal(const GradedSystem& sys);

/// (I, J) with I ⊆ J and I invariant.
class GaugeIdealSpec {
 public:
  /// Throws InvalidIdealSpec.
  GaugeIdealSpec(const GradedSystem& sys, IdealMask I, IdealMask J);

  [[nodiscard]] const IdealMask& I() const { return I_; }
  [[nodiscard]] const IdealMask& J() const { return J_; }

 private:
  IdealMask I_;
  IdealMask J_;
};

struct MembershipVerdict {
  bool verified = true;
  /// Verified: every degree ≤ horizon was checked.
  std::size_t horizon = 0;
  /// Refuted: Σ_i ϑ_i^ℓ(x_i) δ_basis has coefficient `coefficient` on δ_output,
  /// and s(output) lies outside the required mask.
  std::size_t degree = 0;
  ArrowId basis{};
  ArrowId output{};
  Scalar coefficient;
};

/// Checks, for ℓ = 0..L, that y_ℓ = Σ_{i ≤ min(ℓ,N)} ϑ_i^ℓ(x_i) maps E_ℓ into
/// E_ℓ·J for ℓ < N and into E_ℓ·I for ℓ ≥ N.  Throws HorizonTooSmall (L < N),
/// CapExceeded (L > cap).
MembershipVerdict kernel_membership(const GradedSystem& sys, const FixedPointElement& X,
                                    const GaugeIdealSpec& spec, std::size_t L);

/// δ_v − Σ |δ_e⟩⟨δ_e| over irreducible e with range v.
FixedPointElement cuntz_krieger_element(const GradedSystem& sys, VertexId v);

struct CkReport {
  IdealMask katsura;
  std::size_t horizon = 0;
  std::vector<std::pair<VertexId, MembershipVerdict>> vertices;

  [[nodiscard]] bool all_verified() const;
};

/// Runs kernel_membership on every Cuntz–Krieger element with I = ∅, J = K⊥.
/// Throws NotPathCategory.
CkReport ck_relations(const GradedSystem& sys, std::size_t L);

struct JmaxResult {
  bool global = true;
  IdealMask mask;
  /// NotGlobal: `witness` of degree n+m is not a product from E_n × E_m.
  std::optional<ArrowId> witness;
  std::size_t n = 0;
  std::size_t m = 0;
};

JmaxResult jmax_global(const GradedSystem& sys);

}  // namespace pps
