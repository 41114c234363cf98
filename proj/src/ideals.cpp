#include "pps/ideals.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "pps/error.hpp"

namespace pps {

namespace {

void require_in_range(const GradedSystem& sys, const IdealMask& mask) {
  for (VertexId v : mask.support()) {
    if (index(v) >= sys.vertex_count()) {
      throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(index(v)));
    }
  }
}

/// The table data of sys restricted to the given vertices and arrows.
GradedSystem filtered(const GradedSystem& sys, const IdealMask& vertices,
                      const std::vector<bool>& keep) {
  TableSpec spec;
  spec.cap = sys.cap();
  for (VertexId v : vertices.support()) spec.vertices.push_back(sys.vertex_name(v));
  for (const Arrow& a : sys.arrows()) {
    const ArrowId id = sys.arrow_id(a.name);
    if (a.degree == 0 || !keep[index(id)]) continue;
    spec.arrows.push_back({a.name, a.degree, sys.vertex_name(a.src), sys.vertex_name(a.rng)});
  }
  auto kept = [&](ArrowId a) { return keep[index(a)]; };
  for (const auto& [xy, z] : sys.table()) {
    if (kept(xy.first) && kept(xy.second) && kept(z)) {
      spec.entries.push_back({sys.name(xy.first), sys.name(xy.second), sys.name(z)});
    }
  }
  for (const auto& [xy, z] : sys.unit_entries()) {
    if (kept(xy.first) && kept(xy.second) && kept(z)) {
      spec.entries.push_back({sys.name(xy.first), sys.name(xy.second), sys.name(z)});
    }
  }
  return build_table(spec);
}

}  // namespace

std::optional<ArrowId> invariance_witness(const GradedSystem& sys, const IdealMask& W) {
  require_in_range(sys, W);
  for (std::size_t k = 0; k < sys.arrow_count(); ++k) {
    const ArrowId e = arrow_at(k);
    if (W.contains(sys.rng(e)) && !W.contains(sys.src(e))) return e;
  }
  return std::nullopt;
}

bool is_invariant(const GradedSystem& sys, const IdealMask& W) {
  return !invariance_witness(sys, W).has_value();
}

std::vector<IdealMask> enumerate_invariant(const GradedSystem& sys, std::size_t bound) {
  const std::size_t n = sys.vertex_count();
  if (n > bound || n >= 63) {
    throw Error(ErrorKind::TooManyVertices,
                std::to_string(n) + " vertices exceed the bound " + std::to_string(bound));
  }
  std::vector<IdealMask> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    IdealMask W;
    for (std::size_t v = 0; v < n; ++v) {
      if (bits >> v & 1U) W.insert(vertex_at(v));
    }
    if (is_invariant(sys, W)) out.push_back(std::move(W));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedSystem restrict_hereditary(const GradedSystem& sys, const IdealMask& U) {
  require_in_range(sys, U);
  std::vector<bool> keep(sys.arrow_count());
  for (std::size_t k = 0; k < sys.arrow_count(); ++k) {
    const ArrowId e = arrow_at(k);
    keep[k] = U.contains(sys.src(e)) && U.contains(sys.rng(e));
  }
  return filtered(sys, U, keep);
}

GradedSystem quotient(const GradedSystem& sys, const IdealMask& W) {
  if (auto bad = invariance_witness(sys, W)) {
    throw Error(ErrorKind::NotInvariant, to_string(sys, W) + " is not invariant: " +
                                             sys.name(*bad) + " has range in it but source " +
                                             sys.vertex_name(sys.src(*bad)) + " outside");
  }
  IdealMask rest;
  for (std::size_t v = 0; v < sys.vertex_count(); ++v) {
    if (!W.contains(vertex_at(v))) rest.insert(vertex_at(v));
  }
  std::vector<bool> keep(sys.arrow_count());
  for (std::size_t k = 0; k < sys.arrow_count(); ++k) {
    keep[k] = !W.contains(sys.src(arrow_at(k)));
  }
  return filtered(sys, rest, keep);
}

IdealMask katsura_ideal(const GradedSystem& sys) {
  IdealMask mask;
  for (const Arrow& a : sys.arrows()) {
    if (a.degree > 0) mask.insert(a.rng);
  }
  return mask;
}

GaugeIdealSpec::GaugeIdealSpec(const GradedSystem& sys, IdealMask I, IdealMask J)
    : I_(std::move(I)), J_(std::move(J)) {
  require_in_range(sys, I_);
  require_in_range(sys, J_);
  if (!I_.subset_of(J_)) {
    throw Error(ErrorKind::InvalidIdealSpec,
                "I = " + to_string(sys, I_) + " is not contained in J = " + to_string(sys, J_));
  }
  if (!is_invariant(sys, I_)) {
    throw Error(ErrorKind::InvalidIdealSpec, "I = " + to_string(sys, I_) + " is not invariant");
  }
}

MembershipVerdict kernel_membership(const GradedSystem& sys, const FixedPointElement& X,
                                    const GaugeIdealSpec& spec, std::size_t L) {
  const std::size_t N = X.top_degree();
  if (L < N) {
    throw Error(ErrorKind::HorizonTooSmall,
                "horizon " + std::to_string(L) + " is below the element degree " + std::to_string(N));
  }
  if (L > sys.cap()) {
    throw Error(ErrorKind::CapExceeded,
                "horizon " + std::to_string(L) + " exceeds cap " + std::to_string(sys.cap()));
  }
  MembershipVerdict verdict;
  for (std::size_t l = 0; l <= L; ++l) {
    CompactBlock y;
    for (std::size_t i = 0; i <= std::min(l, N) && i < X.blocks.size(); ++i) {
      for (const auto& [tp, c] : theta_compress(sys, i, X.blocks[i], l)) {
        accumulate(y, tp.first, tp.second, c);
      }
    }
    const IdealMask& target = l < N ? spec.J() : spec.I();
    // scan by basis column first, then by output row
    std::optional<std::tuple<ArrowId, ArrowId, Scalar>> first;
    for (const auto& [tp, c] : y) {
      const auto [t, p] = tp;
      if (target.contains(sys.src(t))) continue;
      if (!first || std::tie(p, t) < std::tie(std::get<0>(*first), std::get<1>(*first))) {
        first = std::make_tuple(p, t, c);
      }
    }
    if (first) {
      verdict.verified = false;
      verdict.degree = l;
      verdict.basis = std::get<0>(*first);
      verdict.output = std::get<1>(*first);
      verdict.coefficient = std::get<2>(*first);
      return verdict;
    }
  }
  verdict.horizon = L;
  return verdict;
}

FixedPointElement cuntz_krieger_element(const GradedSystem& sys, VertexId v) {
  std::vector<ArrowId> receivers;
  std::size_t top = 0;
  for (ArrowId e : sys.arrows_into(v)) {
    if (sys.degree(e) > 0 && sys.factorizations(e).empty()) {
      receivers.push_back(e);
      top = std::max(top, sys.degree(e));
    }
  }
  FixedPointElement X;
  X.blocks.resize(top + 1);
  accumulate(X.blocks[0], sys.identity(v), sys.identity(v), Scalar(1));
  for (ArrowId e : receivers) accumulate(X.blocks[sys.degree(e)], e, e, Scalar(-1));
  return X;
}

bool CkReport::all_verified() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const auto& entry) { return entry.second.verified; });
}

CkReport ck_relations(const GradedSystem& sys, std::size_t L) {
  ToeplitzAlgebra guard(sys);  // throws NotPathCategory
  CkReport report;
  report.katsura = katsura_ideal(sys);
  report.horizon = L;
  const GaugeIdealSpec spec(sys, IdealMask{}, report.katsura);
  for (VertexId v : report.katsura.support()) {
    report.vertices.emplace_back(v, kernel_membership(sys, cuntz_krieger_element(sys, v), spec, L));
  }
  return report;
}

JmaxResult jmax_global(const GradedSystem& sys) {
  JmaxResult result;
  for (std::size_t k = 0; k < sys.arrow_count(); ++k) {
    const ArrowId t = arrow_at(k);
    const std::size_t d = sys.degree(t);
    for (std::size_t n = 1; n < d; ++n) {
      const auto facts = sys.factorizations(t);
      const bool hit = std::any_of(facts.begin(), facts.end(),
                                   [&](const auto& f) { return sys.degree(f.first) == n; });
      if (!hit) {
        result.global = false;
        result.witness = t;
        result.n = n;
        result.m = d - n;
        return result;
      }
    }
  }
  for (ArrowId e : sys.of_degree(1)) result.mask.insert(sys.rng(e));
  return result;
}

}  // namespace pps
