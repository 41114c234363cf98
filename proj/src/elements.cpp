#include "pps/elements.hpp"

#include <algorithm>

#include "pps/error.hpp"

namespace pps {

VertexFunction indicator(VertexId v, const Scalar& value) {
  VertexFunction f;
  accumulate(f, v, value);
  return f;
}

void accumulate(VertexFunction& f, VertexId v, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = f.emplace(v, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) f.erase(it);
}

Element Element::delta(const GradedSystem& sys, ArrowId a) {
  Element x{sys.degree(a), {}};
  x.coeffs.emplace(a, Scalar(1));
  return x;
}

void Element::add(ArrowId a, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

Element operator+(const Element& x, const Element& y) {
  if (x.degree != y.degree) {
    throw Error(ErrorKind::DegreeMismatch, "cannot add elements of degree " +
                                               std::to_string(x.degree) + " and " +
                                               std::to_string(y.degree));
  }
  Element out = x;
  for (const auto& [a, c] : y.coeffs) out.add(a, c);
  return out;
}

Element operator*(const Scalar& c, const Element& x) {
  Element out = Element::zero(x.degree);
  for (const auto& [a, v] : x.coeffs) out.add(a, c * v);
  return out;
}

namespace {

std::string term(const Scalar& c, const std::string& basis) {
  if (c == Scalar(1)) return basis;
  if (c == Scalar(-1)) return "-" + basis;
  const std::string s = c.to_string();
  if (!c.is_real() && sgn(c.re()) != 0) return "(" + s + ")" + basis;
  return s + basis;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k].front() == '-') {
      out += " - " + terms[k].substr(1);
    } else {
      out += " + " + terms[k];
    }
  }
  return out;
}

void require_same_degree(const Element& x, const Element& y) {
  if (x.degree != y.degree) {
    throw Error(ErrorKind::DegreeMismatch, "degrees " + std::to_string(x.degree) + " and " +
                                               std::to_string(y.degree));
  }
}

}  // namespace

std::string to_string(const GradedSystem& sys, const Element& x) {
  std::vector<std::string> terms;
  for (const auto& [a, c] : x.coeffs) terms.push_back(term(c, "δ_" + sys.name(a)));
  return join_terms(terms);
}

std::string to_string(const GradedSystem& sys, const VertexFunction& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, c] : f) {
    if (!first) out += ", ";
    first = false;
    out += sys.vertex_name(v) + ": " + c.to_string();
  }
  return out + "}";
}

IdealMask IdealMask::from_names(const GradedSystem& sys, const std::vector<std::string>& names) {
  IdealMask mask;
  for (const std::string& n : names) mask.insert(sys.vertex(n));
  return mask;
}

IdealMask IdealMask::full(const GradedSystem& sys) {
  IdealMask mask;
  for (std::size_t v = 0; v < sys.vertex_count(); ++v) {
    mask.insert(vertex_at(v));
  }
  return mask;
}

bool IdealMask::subset_of(const IdealMask& other) const {
  return std::includes(other.support_.begin(), other.support_.end(), support_.begin(),
                       support_.end());
}

IdealMask operator&(const IdealMask& a, const IdealMask& b) {
  std::set<VertexId> out;
  std::set_intersection(a.support_.begin(), a.support_.end(), b.support_.begin(),
                        b.support_.end(), std::inserter(out, out.end()));
  return IdealMask(std::move(out));
}

IdealMask operator|(const IdealMask& a, const IdealMask& b) {
  std::set<VertexId> out = a.support_;
  out.insert(b.support_.begin(), b.support_.end());
  return IdealMask(std::move(out));
}

bool operator<(const IdealMask& a, const IdealMask& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.support_ < b.support_;
}

std::string to_string(const GradedSystem& sys, const IdealMask& mask) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : mask.support()) {
    if (!first) out += ",";
    first = false;
    out += sys.vertex_name(v);
  }
  return out + "}";
}

VertexFunction inner_product(const GradedSystem& sys, const Element& x, const Element& y) {
  require_same_degree(x, y);
  VertexFunction out;
  for (const auto& [e, c] : x.coeffs) {
    auto it = y.coeffs.find(e);
    if (it != y.coeffs.end()) accumulate(out, sys.src(e), c.conj() * it->second);
  }
  return out;
}

VertexFunction left_inner_product(const GradedSystem& sys, const Element& x, const Element& y) {
  require_same_degree(x, y);
  VertexFunction out;
  for (const auto& [e, c] : x.coeffs) {
    auto it = y.coeffs.find(e);
    if (it != y.coeffs.end()) accumulate(out, sys.rng(e), c * it->second.conj());
  }
  return out;
}

Element module_action(const GradedSystem& sys, const VertexFunction& a, const Element& x,
                      Side side) {
  Element out = Element::zero(x.degree);
  for (const auto& [e, c] : x.coeffs) {
    auto it = a.find(side == Side::Left ? sys.rng(e) : sys.src(e));
    if (it != a.end()) out.add(e, side == Side::Left ? it->second * c : c * it->second);
  }
  return out;
}

Element multiply_elements(const GradedSystem& sys, const Element& x, const Element& y) {
  const std::size_t degree = x.degree + y.degree;
  if (degree > sys.cap()) {
    throw Error(ErrorKind::CapExceeded, "product of degree " + std::to_string(degree) +
                                            " exceeds cap " + std::to_string(sys.cap()));
  }
  Element out = Element::zero(degree);
  for (const auto& [a, c] : x.coeffs) {
    for (const auto& [b, d] : y.coeffs) {
      if (auto ab = sys.compose(a, b)) out.add(*ab, c * d);
    }
  }
  return out;
}

IsometryVerdict check_isometry(const GradedSystem& sys, std::size_t n, std::size_t m) {
  if (n + m > sys.cap()) {
    throw Error(ErrorKind::CapExceeded, "degree pair (" + std::to_string(n) + "," +
                                            std::to_string(m) + ") exceeds cap " +
                                            std::to_string(sys.cap()));
  }
  IsometryVerdict verdict;
  verdict.n = n;
  verdict.m = m;

  // both sides vanish unless each pair is composable (balanced tensor product)
  std::vector<std::pair<ArrowId, ArrowId>> pairs;
  for (ArrowId x : sys.of_degree(n)) {
    for (ArrowId y : sys.of_degree(m)) {
      if (sys.src(x) == sys.rng(y)) pairs.emplace_back(x, y);
    }
  }
  for (const auto& [x, y] : pairs) {
    const Element xy = multiply_elements(sys, Element::delta(sys, x), Element::delta(sys, y));
    for (const auto& [x2, y2] : pairs) {
      const Element xy2 =
          multiply_elements(sys, Element::delta(sys, x2), Element::delta(sys, y2));
      VertexFunction lhs = inner_product(sys, xy, xy2);
      const VertexFunction xx = inner_product(sys, Element::delta(sys, x), Element::delta(sys, x2));
      VertexFunction rhs = inner_product(
          sys, Element::delta(sys, y), module_action(sys, xx, Element::delta(sys, y2), Side::Left));
      if (lhs != rhs) {
        verdict.ok = false;
        verdict.witness = std::array<ArrowId, 4>{x, y, x2, y2};
        verdict.lhs = std::move(lhs);
        verdict.rhs = std::move(rhs);
        return verdict;
      }
    }
  }
  return verdict;
}

BimoduleVerdict hilbert_bimodule_check(const GradedSystem& sys, std::size_t n) {
  BimoduleVerdict verdict;
  verdict.degree = n;
  const auto arrows = sys.of_degree(n);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t j = i + 1; j < arrows.size(); ++j) {
      const bool same_rng = sys.rng(arrows[i]) == sys.rng(arrows[j]);
      if (same_rng || sys.src(arrows[i]) == sys.src(arrows[j])) {
        verdict.ok = false;
        verdict.clash = std::make_pair(arrows[i], arrows[j]);
        verdict.clash_side = same_rng ? Side::Left : Side::Right;
        return verdict;
      }
    }
  }
  for (ArrowId e : arrows) {
    for (ArrowId f : arrows) {
      VertexFunction value =
          left_inner_product(sys, Element::delta(sys, e), Element::delta(sys, f));
      if (!value.empty()) verdict.left_inner.emplace(std::make_pair(e, f), std::move(value));
    }
  }
  return verdict;
}

}  // namespace pps
