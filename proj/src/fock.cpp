#include "pps/fock.hpp"

#include <tuple>

#include "pps/error.hpp"

namespace pps {

namespace {

void require_within_cap(const GradedSystem& sys, std::size_t N) {
  if (N > sys.cap()) {
    throw Error(ErrorKind::CapExceeded, "truncation " + std::to_string(N) + " exceeds cap " +
                                            std::to_string(sys.cap()));
  }
}

void require_valid(const GradedSystem& sys) {
  const ValidationReport report = validate(sys);
  if (!report.ok()) throw Error(ErrorKind::InvalidSystem, report.violations.front().message);
}

Element as_element(const GradedSystem& sys, const FockVector& v, std::size_t degree) {
  Element x = Element::zero(degree);
  for (const auto& [k, c] : v) {
    const ArrowId a = arrow_at(k);
    if (sys.degree(a) != degree) {
      throw Error(ErrorKind::DegreeMismatch, "vector is not homogeneous of degree " +
                                                 std::to_string(degree));
    }
    x.add(a, c);
  }
  return x;
}

}  // namespace

TruncatedFock::TruncatedFock(const GradedSystem& sys, std::size_t N)
    : sys_(&sys), N_(N), dimension_(0) {
  require_within_cap(sys, N);
  dimension_ = sys.count_up_to_degree(N);
}

std::span<const ArrowId> TruncatedFock::block(std::size_t k) const {
  if (k > N_) return {};
  return sys_->of_degree(k);
}

FockVector basis_vector(ArrowId a) { return FockVector{{index(a), Scalar(1)}}; }

FockVector to_fock(const Element& x) {
  FockVector v;
  for (const auto& [a, c] : x.coeffs) v.emplace(index(a), c);
  return v;
}

std::string to_string(const GradedSystem& sys, const FockVector& v) {
  std::string out;
  if (v.empty()) return "0";
  bool first = true;
  for (const auto& [k, c] : v) {
    const ArrowId a = arrow_at(k);
    Element one = Element::zero(sys.degree(a));
    one.add(a, c);
    std::string t = to_string(sys, one);
    if (first) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
    first = false;
  }
  return out;
}

SparseMatrix BlockMap::block(std::size_t k) const {
  auto it = blocks_.find(k);
  return it == blocks_.end() ? SparseMatrix(dimension_, dimension_) : it->second;
}

void BlockMap::add(std::size_t source_degree, ArrowId row, ArrowId col, const Scalar& value) {
  auto [it, inserted] = blocks_.try_emplace(source_degree, dimension_, dimension_);
  it->second.add(index(row), index(col), value);
  if (it->second.is_zero()) blocks_.erase(it);
}

FockVector BlockMap::apply(const FockVector& v) const {
  FockVector out;
  for (const auto& [k, m] : blocks_) {
    for (const auto& [key, c] : m.apply(v)) accumulate(out, key, c);
  }
  return out;
}

BlockMap BlockMap::adjoint() const {
  BlockMap out(N_, dimension_, -shift_);
  for (const auto& [k, m] : blocks_) {
    out.blocks_.emplace(static_cast<std::size_t>(static_cast<long>(k) + shift_), m.adjoint());
  }
  return out;
}

BlockMap BlockMap::restrict_source(std::size_t max_degree) const {
  BlockMap out(N_, dimension_, shift_);
  for (const auto& [k, m] : blocks_) {
    if (k <= max_degree) out.blocks_.emplace(k, m);
  }
  return out;
}

SparseMatrix BlockMap::to_matrix() const {
  SparseMatrix out(dimension_, dimension_);
  for (const auto& [k, m] : blocks_) out = out + m;
  return out;
}

BlockMap operator*(const BlockMap& a, const BlockMap& b) {
  BlockMap out(a.N_, a.dimension_, a.shift_ + b.shift_);
  for (const auto& [k, mb] : b.blocks_) {
    const long mid = static_cast<long>(k) + b.shift_;
    if (mid < 0) continue;
    auto it = a.blocks_.find(static_cast<std::size_t>(mid));
    if (it == a.blocks_.end()) continue;
    SparseMatrix product = it->second * mb;
    if (!product.is_zero()) out.blocks_.emplace(k, std::move(product));
  }
  return out;
}

bool operator==(const BlockMap& a, const BlockMap& b) {
  return a.shift_ == b.shift_ && a.blocks_ == b.blocks_;
}

BlockMap creation_operator(const GradedSystem& sys, std::size_t N, const Element& x) {
  require_within_cap(sys, N);
  const std::size_t n = x.degree;
  if (n > N) {
    throw Error(ErrorKind::CapExceeded, "creation operator of degree " + std::to_string(n) +
                                            " on truncation " + std::to_string(N));
  }
  BlockMap out(N, sys.count_up_to_degree(N), static_cast<long>(n));
  for (std::size_t k = 0; k + n <= N; ++k) {
    for (ArrowId y : sys.of_degree(k)) {
      for (const auto& [e, c] : x.coeffs) {
        if (auto ey = sys.compose(e, y)) out.add(k, *ey, y, c);
      }
    }
  }
  return out;
}

BlockMap left_action_operator(const GradedSystem& sys, std::size_t N, const VertexFunction& a) {
  require_within_cap(sys, N);
  BlockMap out(N, sys.count_up_to_degree(N), 0);
  for (std::size_t k = 0; k <= N; ++k) {
    for (ArrowId z : sys.of_degree(k)) {
      auto it = a.find(sys.rng(z));
      if (it != a.end()) out.add(k, z, z, it->second);
    }
  }
  return out;
}

namespace {

/// First basis vector of source degree ≤ max_degree on which a and b differ.
std::optional<std::tuple<ArrowId, FockVector, FockVector>> first_difference(
    const GradedSystem& sys, const BlockMap& a, const BlockMap& b, std::size_t max_degree) {
  for (std::size_t k = 0; k <= max_degree; ++k) {
    for (ArrowId z : sys.of_degree(k)) {
      FockVector lhs = a.apply(basis_vector(z));
      FockVector rhs = b.apply(basis_vector(z));
      if (lhs != rhs) return std::make_tuple(z, std::move(lhs), std::move(rhs));
    }
  }
  return std::nullopt;
}

std::vector<BlockMap> all_creations(const GradedSystem& sys, std::size_t N) {
  std::vector<BlockMap> out;
  const std::size_t count = sys.count_up_to_degree(N);
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(
        creation_operator(sys, N, Element::delta(sys, arrow_at(k))));
  }
  return out;
}

}  // namespace

WeakRepReport check_weak_representation(const GradedSystem& sys, std::size_t N) {
  require_valid(sys);
  require_within_cap(sys, N);
  WeakRepReport report;
  report.truncation = N;
  const std::vector<BlockMap> S = all_creations(sys, N);

  for (std::size_t n = 0; n <= N; ++n) {
    for (ArrowId x : sys.of_degree(n)) {
      for (std::size_t m = 0; n + m <= N; ++m) {
        for (ArrowId y : sys.of_degree(m)) {
          const BlockMap lhs = S[index(x)] * S[index(y)];
          const Element xy =
              multiply_elements(sys, Element::delta(sys, x), Element::delta(sys, y));
          const BlockMap rhs = creation_operator(sys, N, xy);
          if (lhs == rhs) continue;
          if (auto diff = first_difference(sys, lhs, rhs, N - n - m)) {
            auto [z, l, r] = std::move(*diff);
            report.ok = false;
            report.failure = WeakRepFailure{1, x, y, z, std::move(l), std::move(r)};
            return report;
          }
        }
      }
    }
  }

  for (std::size_t n = 0; n <= N; ++n) {
    for (ArrowId x : sys.of_degree(n)) {
      const BlockMap annihilate = S[index(x)].adjoint();
      for (ArrowId y : sys.of_degree(n)) {
        const BlockMap lhs = (annihilate * S[index(y)]).restrict_source(N - n);
        const BlockMap rhs =
            left_action_operator(sys, N,
                                 inner_product(sys, Element::delta(sys, x), Element::delta(sys, y)))
                .restrict_source(N - n);
        if (lhs == rhs) continue;
        if (auto diff = first_difference(sys, lhs, rhs, N - n)) {
          auto [z, l, r] = std::move(*diff);
          report.ok = false;
          report.failure = WeakRepFailure{2, x, y, z, std::move(l), std::move(r)};
          return report;
        }
      }
    }
  }
  return report;
}

RepConditionVerdict check_representation_condition(const GradedSystem& sys, std::size_t N) {
  require_valid(sys);
  require_within_cap(sys, N);
  RepConditionVerdict verdict;
  verdict.truncation = N;
  const std::vector<BlockMap> S = all_creations(sys, N);

  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t m = n + 1; m <= N; ++m) {
      for (ArrowId x : sys.of_degree(n)) {
        const BlockMap annihilate = S[index(x)].adjoint();
        for (ArrowId y : sys.of_degree(m)) {
          const BlockMap lhs = annihilate * S[index(y)];
          const Element w = as_element(sys, annihilate.apply(basis_vector(y)), m - n);
          const BlockMap rhs = creation_operator(sys, N, w);
          for (std::size_t k = 0; k + m <= N; ++k) {
            for (ArrowId p : sys.of_degree(k)) {
              FockVector l = lhs.apply(basis_vector(p));
              FockVector r = rhs.apply(basis_vector(p));
              if (l == r) continue;
              verdict.ok = false;
              verdict.witness = RepWitness{n, m, x, y, k, p, std::move(l), std::move(r)};
              return verdict;
            }
          }
        }
      }
    }
  }
  return verdict;
}

}  // namespace pps
