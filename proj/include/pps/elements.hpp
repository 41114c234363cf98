#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pps/graded_graph.hpp"
#include "pps/scalar.hpp"

namespace pps {

/// An element of the coefficient algebra ℂ^V; zero values are never stored.
using VertexFunction = std::map<VertexId, Scalar>;

VertexFunction indicator(VertexId v, const Scalar& value = 1);
void accumulate(VertexFunction& f, VertexId v, const Scalar& value);

/// Combination of arrows of one degree, i.e. a vector in E_n.
struct Element {
  std::size_t degree = 0;
  std::map<ArrowId, Scalar> coeffs;

  static Element delta(const GradedSystem& sys, ArrowId a);
  static Element zero(std::size_t degree) { return Element{degree, {}}; }

  /// Adds c·δ_a.  The caller guarantees deg(a) = degree.
  void add(ArrowId a, const Scalar& c);
  [[nodiscard]] bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(const Element& x, const Element& y);  // throws DegreeMismatch
Element operator*(const Scalar& c, const Element& x);

std::string to_string(const GradedSystem& sys, const Element& x);
std::string to_string(const GradedSystem& sys, const VertexFunction& f);

/// A vertex subset, standing for an ideal of ℂ^V.
class IdealMask {
 public:
  IdealMask() = default;
  explicit IdealMask(std::set<VertexId> support) : support_(std::move(support)) {}
  static IdealMask from_names(const GradedSystem& sys, const std::vector<std::string>& names);
  static IdealMask full(const GradedSystem& sys);

  [[nodiscard]] bool contains(VertexId v) const { return support_.count(v) != 0; }
  [[nodiscard]] const std::set<VertexId>& support() const { return support_; }
  [[nodiscard]] std::size_t size() const { return support_.size(); }
  [[nodiscard]] bool empty() const { return support_.empty(); }
  [[nodiscard]] bool subset_of(const IdealMask& other) const;
  void insert(VertexId v) { support_.insert(v); }

  friend IdealMask operator&(const IdealMask& a, const IdealMask& b);
  friend IdealMask operator|(const IdealMask& a, const IdealMask& b);
  friend bool operator==(const IdealMask&, const IdealMask&) = default;
  /// Canonical order: by size, then lexicographically by vertex id.
  friend bool operator<(const IdealMask& a, const IdealMask& b);

 private:
  std::set<VertexId> support_;
};

/// "{v1,v2}" by vertex name.
std::string to_string(const GradedSystem& sys, const IdealMask& mask);

/// ⟨x|y⟩(v) = Σ_{s(e)=v} conj(x(e))·y(e).  Throws DegreeMismatch.
VertexFunction inner_product(const GradedSystem& sys, const Element& x, const Element& y);

/// ⟨⟨x|y⟩⟩(v) = Σ_{r(e)=v} x(e)·conj(y(e)); the left inner product of a
/// graph bimodule.  Throws DegreeMismatch.
VertexFunction left_inner_product(const GradedSystem& sys, const Element& x, const Element& y);

enum class Side { Left, Right };

/// Left: (a·x)(e) = a(r(e))x(e).  Right: (x·a)(e) = x(e)a(s(e)).
Element module_action(const GradedSystem& sys, const VertexFunction& a, const Element& x,
                      Side side);

/// δ_x ⊗ δ_y ↦ δ_{x·y}, extended bilinearly.  Throws CapExceeded.
Element multiply_elements(const GradedSystem& sys, const Element& x, const Element& y);

struct IsometryVerdict {
  bool ok = true;
  std::size_t n = 0;
  std::size_t m = 0;
  /// (x, y, x', y') with ⟨μ(x⊗y)|μ(x'⊗y')⟩ ≠ ⟨y|⟨x|x'⟩y'⟩.
  std::optional<std::array<ArrowId, 4>> witness;
  VertexFunction lhs;
  VertexFunction rhs;
};

/// Exhaustive check over basis quadruples of degrees (n, m).  Throws CapExceeded.
IsometryVerdict check_isometry(const GradedSystem& sys, std::size_t n, std::size_t m);

struct BimoduleVerdict {
  bool ok = true;
  std::size_t degree = 0;
  /// Non-zero values ⟨⟨δ_e|δ_f⟩⟩ (only filled on success).
  std::map<std::pair<ArrowId, ArrowId>, VertexFunction> left_inner;
  /// Two arrows of the degree sharing an endpoint, and which one.
  std::optional<std::pair<ArrowId, ArrowId>> clash;
  Side clash_side = Side::Left;  // Left = same range, Right = same source
};

/// E_n is a Hilbert bimodule with ⟨⟨δ_e|δ_f⟩⟩ = [e=f]·1_{r(e)} exactly when
/// r and s are both injective on E_n.
BimoduleVerdict hilbert_bimodule_check(const GradedSystem& sys, std::size_t n);

}  // namespace pps
