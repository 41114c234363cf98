#include "pps/toeplitz.hpp"

#include <algorithm>

#include "pps/error.hpp"

namespace pps {

long gauge_degree(const GradedSystem& sys, const Generator& g) {
  return static_cast<long>(sys.degree(g.alpha)) - static_cast<long>(sys.degree(g.beta));
}

void ToeplitzElement::add(const Generator& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

ToeplitzElement operator+(const ToeplitzElement& x, const ToeplitzElement& y) {
  ToeplitzElement out = x;
  for (const auto& [g, c] : y.terms) out.add(g, c);
  return out;
}

ToeplitzElement operator-(const ToeplitzElement& x, const ToeplitzElement& y) {
  ToeplitzElement out = x;
  for (const auto& [g, c] : y.terms) out.add(g, -c);
  return out;
}

ToeplitzElement operator*(const Scalar& c, const ToeplitzElement& x) {
  ToeplitzElement out;
  for (const auto& [g, v] : x.terms) out.add(g, c * v);
  return out;
}

std::string to_string(const GradedSystem& sys, const ToeplitzElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms) {
    const std::string gen = "T[" + sys.name(g.alpha) + "," + sys.name(g.beta) + "]";
    bool negative = false;
    std::string coeff;
    if (c == Scalar(1)) {
    } else if (c == Scalar(-1)) {
      negative = true;
    } else if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      coeff = (negative ? -c : c).to_string() + "·";
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      coeff = (negative ? -c : c).to_string() + "·";
    } else {
      coeff = "(" + c.to_string() + ")·";
    }
    if (first) {
      out = (negative ? "-" : "") + coeff + gen;
    } else {
      out += (negative ? " - " : " + ") + coeff + gen;
    }
    first = false;
  }
  return out;
}

GeneratorResult make_generator(const GradedSystem& sys, ArrowId alpha, ArrowId beta) {
  GeneratorResult result;
  if (sys.src(alpha) != sys.src(beta)) {
    result.source_mismatch = true;
    return result;
  }
  result.element.add({alpha, beta}, Scalar(1));
  return result;
}

ToeplitzAlgebra::ToeplitzAlgebra(const GradedSystem& sys) : sys_(&sys) {
  bool ok = false;
  std::string detail;
  try {
    const PathCategoryVerdict verdict = check_path_category(sys);
    ok = verdict.is_path_category;
    if (!ok) {
      detail = sys.name(verdict.witness->arrow) + " = " + word_string(sys, verdict.witness->first) +
               " = " + word_string(sys, verdict.witness->second);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidSystem) throw;
    detail = e.what();
  }
  if (!ok) throw Error(ErrorKind::NotPathCategory, detail);
}

namespace {

ArrowId checked_compose(const GradedSystem& sys, ArrowId x, ArrowId y) {
  if (auto xy = sys.compose(x, y)) return *xy;
  throw Error(ErrorKind::CapExceeded, sys.name(x) + "·" + sys.name(y) + " has degree " +
                                          std::to_string(sys.degree(x) + sys.degree(y)) +
                                          " beyond cap " + std::to_string(sys.cap()));
}

}  // namespace

ToeplitzElement ToeplitzAlgebra::multiply(const Generator& g, const Generator& h) const {
  const GradedSystem& sys = *sys_;
  ToeplitzElement out;
  if (auto eps = sys.left_quotient(h.alpha, g.beta)) {
    out.add({checked_compose(sys, g.alpha, *eps), h.beta}, Scalar(1));
  } else if (auto eps2 = sys.left_quotient(g.beta, h.alpha)) {
    out.add({g.alpha, checked_compose(sys, h.beta, *eps2)}, Scalar(1));
  }
  return out;
}

ToeplitzElement ToeplitzAlgebra::multiply(const ToeplitzElement& x,
                                          const ToeplitzElement& y) const {
  ToeplitzElement out;
  for (const auto& [g, c] : x.terms) {
    for (const auto& [h, d] : y.terms) {
      for (const auto& [k, one] : multiply(g, h).terms) out.add(k, c * d * one);
    }
  }
  return out;
}

ToeplitzElement adjoint(const ToeplitzElement& x) {
  ToeplitzElement out;
  for (const auto& [g, c] : x.terms) out.add({g.beta, g.alpha}, c.conj());
  return out;
}

ToeplitzElement spectral_project(const GradedSystem& sys, const ToeplitzElement& x, long k) {
  ToeplitzElement out;
  for (const auto& [g, c] : x.terms) {
    if (gauge_degree(sys, g) == k) out.terms.emplace(g, c);
  }
  return out;
}

std::size_t max_path_degree(const GradedSystem& sys, const ToeplitzElement& x) {
  std::size_t d = 0;
  for (const auto& [g, c] : x.terms) {
    d = std::max({d, sys.degree(g.alpha), sys.degree(g.beta)});
  }
  return d;
}

SparseMatrix evaluate_on_fock(const GradedSystem& sys, const ToeplitzElement& x, std::size_t N) {
  if (N > sys.cap()) {
    throw Error(ErrorKind::CapExceeded, "truncation " + std::to_string(N) + " exceeds cap " +
                                            std::to_string(sys.cap()));
  }
  const std::size_t dim = sys.count_up_to_degree(N);
  SparseMatrix out(dim, dim);
  for (const auto& [g, c] : x.terms) {
    const std::size_t da = sys.degree(g.alpha);
    const std::size_t db = sys.degree(g.beta);
    for (ArrowId z : sys.arrows_into(sys.src(g.beta))) {
      const std::size_t dz = sys.degree(z);
      if (da + dz > N || db + dz > N) continue;
      const auto p = sys.compose(g.beta, z);
      const auto q = sys.compose(g.alpha, z);
      if (p && q) out.add(index(*q), index(*p), c);
    }
  }
  return out;
}

void accumulate(CompactBlock& block, ArrowId row, ArrowId col, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = block.emplace(std::make_pair(row, col), value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) block.erase(it);
}

ToeplitzElement FixedPointElement::to_toeplitz(const GradedSystem& sys) const {
  ToeplitzElement out;
  for (const CompactBlock& block : blocks) {
    for (const auto& [ef, c] : block) {
      if (sys.src(ef.first) == sys.src(ef.second)) out.add({ef.first, ef.second}, c);
    }
  }
  return out;
}

CompactBlock theta_compress(const GradedSystem& sys, std::size_t j, const CompactBlock& x,
                            std::size_t k) {
  if (j > k) {
    throw Error(ErrorKind::DegreeOrder,
                "cannot compress degree " + std::to_string(j) + " into degree " + std::to_string(k));
  }
  if (k > sys.cap()) {
    throw Error(ErrorKind::CapExceeded,
                "degree " + std::to_string(k) + " exceeds cap " + std::to_string(sys.cap()));
  }
  CompactBlock out;
  for (const auto& [ab, c] : x) {
    const auto [a, b] = ab;
    if (sys.degree(a) != j || sys.degree(b) != j) {
      throw Error(ErrorKind::DegreeMismatch, "|" + sys.name(a) + "⟩⟨" + sys.name(b) +
                                                 "| is not in degree " + std::to_string(j));
    }
    if (sys.src(a) != sys.src(b)) continue;
    for (ArrowId p : sys.of_degree(k)) {
      const auto z = sys.left_quotient(p, b);
      if (!z) continue;
      if (const auto q = sys.compose(a, *z)) accumulate(out, *q, p, c);
    }
  }
  return out;
}

IndependenceReport generator_independence(const GradedSystem& sys, std::size_t D) {
  if (D > sys.cap()) {
    throw Error(ErrorKind::CapExceeded,
                "degree bound " + std::to_string(D) + " exceeds cap " + std::to_string(sys.cap()));
  }
  IndependenceReport report;
  report.degree_bound = D;
  std::vector<SparseVector> images;
  for (std::size_t da = 0; da <= D; ++da) {
    for (ArrowId alpha : sys.of_degree(da)) {
      for (ArrowId beta : sys.arrows_from(sys.src(alpha))) {
        if (sys.degree(beta) > D) continue;
        ToeplitzElement g;
        g.add({alpha, beta}, Scalar(1));
        images.push_back(evaluate_on_fock(sys, g, D).flatten());
      }
    }
  }
  report.generators = images.size();
  report.rank = rank(images);
  return report;
}

}  // namespace pps
