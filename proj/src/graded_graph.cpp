#include "pps/graded_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "pps/error.hpp"

namespace pps {

std::string_view to_string(Mode mode) { return mode == Mode::Free ? "free" : "table"; }

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EndpointMismatch: return "endpoint";
    case ViolationKind::NotInjective: return "injectivity";
    case ViolationKind::MissingComposite: return "totality";
    case ViolationKind::NotAssociative: return "associativity";
    case ViolationKind::UnitLaw: return "unit";
  }
  return "unknown";
}

std::optional<VertexId> GradedSystem::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return VertexId(static_cast<std::uint32_t>(it - vertices_.begin()));
}

VertexId GradedSystem::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorKind::UnknownVertex, std::string(name));
}

const Arrow& GradedSystem::arrow(ArrowId a) const {
  if (index(a) >= arrows_.size()) {
    throw Error(ErrorKind::UnknownArrow, "arrow id " + std::to_string(index(a)));
  }
  return arrows_[index(a)];
}

std::optional<ArrowId> GradedSystem::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

ArrowId GradedSystem::arrow_id(std::string_view name) const {
  if (auto a = find_arrow(name)) return *a;
  throw Error(ErrorKind::UnknownArrow, std::string(name));
}

ArrowId GradedSystem::identity(VertexId v) const {
  if (index(v) >= vertices_.size()) {
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(index(v)));
  }
  // identities sort first and in vertex-name order
  return ArrowId(static_cast<std::uint32_t>(index(v)));
}

std::span<const ArrowId> GradedSystem::of_degree(std::size_t n) const {
  if (n >= by_degree_.size()) return {};
  return by_degree_[n];
}

std::size_t GradedSystem::count_up_to_degree(std::size_t n) const {
  std::size_t total = 0;
  for (std::size_t d = 0; d <= n && d < by_degree_.size(); ++d) total += by_degree_[d].size();
  return total;
}

std::optional<ArrowId> GradedSystem::compose(ArrowId x, ArrowId y) const {
  const Arrow& ax = arrow(x);
  const Arrow& ay = arrow(y);
  if (ax.src != ay.rng) return std::nullopt;
  if (ax.degree == 0) return y;
  if (ay.degree == 0) return x;
  auto it = table_.find({x, y});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> GradedSystem::left_quotient(ArrowId t, ArrowId prefix) const {
  const Arrow& at = arrow(t);
  const Arrow& ap = arrow(prefix);
  if (prefix == t) return identity(at.src);
  if (ap.degree == 0) {
    if (prefix == identity(at.rng)) return t;
    return std::nullopt;
  }
  for (const auto& [x, y] : factorizations_[index(t)]) {
    if (x == prefix) return y;
  }
  return std::nullopt;
}

std::optional<ArrowId> GradedSystem::right_quotient(ArrowId t, ArrowId suffix) const {
  const Arrow& at = arrow(t);
  const Arrow& as = arrow(suffix);
  if (suffix == t) return identity(at.rng);
  if (as.degree == 0) {
    if (suffix == identity(at.src)) return t;
    return std::nullopt;
  }
  for (const auto& [x, y] : factorizations_[index(t)]) {
    if (y == suffix) return x;
  }
  return std::nullopt;
}

TableSpec GradedSystem::to_table_spec() const {
  TableSpec spec;
  spec.cap = cap_;
  spec.vertices = vertices_;
  for (const Arrow& a : arrows_) {
    if (a.degree == 0) continue;
    spec.arrows.push_back({a.name, a.degree, vertex_name(a.src), vertex_name(a.rng)});
  }
  for (const auto& [xy, z] : table_) {
    spec.entries.push_back({name(xy.first), name(xy.second), name(z)});
  }
  for (const auto& [xy, z] : unit_entries_) {
    spec.entries.push_back({name(xy.first), name(xy.second), name(z)});
  }
  return spec;
}

GradedSystem GradedSystem::assemble(Mode mode, std::size_t cap, std::vector<std::string> vertices,
                                    std::vector<ArrowDecl> arrows,
                                    const std::vector<MulEntry>& entries) {
  GradedSystem sys;
  sys.mode_ = mode;
  sys.cap_ = cap;

  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw Error(ErrorKind::DuplicateName, "vertex " + *dup);
  }
  sys.vertices_ = std::move(vertices);

  std::set<std::string> names(sys.vertices_.begin(), sys.vertices_.end());
  for (const ArrowDecl& d : arrows) {
    if (d.degree == 0) {
      throw Error(ErrorKind::MalformedEntry,
                  "arrow " + d.name + " has degree 0; identities are implicit");
    }
    if (!names.insert(d.name).second) throw Error(ErrorKind::DuplicateName, d.name);
    if (!sys.find_vertex(d.src)) throw Error(ErrorKind::UnknownVertex, d.src);
    if (!sys.find_vertex(d.rng)) throw Error(ErrorKind::UnknownVertex, d.rng);
    if (d.degree > cap) {
      throw Error(ErrorKind::CapTooSmall, "arrow " + d.name + " has degree " +
                                              std::to_string(d.degree) + " > cap " +
                                              std::to_string(cap));
    }
  }

  std::vector<Arrow> all;
  all.reserve(sys.vertices_.size() + arrows.size());
  for (std::size_t v = 0; v < sys.vertices_.size(); ++v) {
    const VertexId id = vertex_at(v);
    all.push_back({sys.vertices_[v], 0, id, id});
  }
  for (const ArrowDecl& d : arrows) {
    all.push_back({d.name, d.degree, *sys.find_vertex(d.src), *sys.find_vertex(d.rng)});
  }
  std::sort(all.begin(), all.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.degree, a.name) < std::tie(b.degree, b.name);
  });
  sys.arrows_ = std::move(all);

  sys.by_degree_.assign(cap + 1, {});
  sys.into_.assign(sys.vertices_.size(), {});
  sys.from_.assign(sys.vertices_.size(), {});
  for (std::size_t k = 0; k < sys.arrows_.size(); ++k) {
    const ArrowId id = arrow_at(k);
    const Arrow& a = sys.arrows_[k];
    sys.arrow_index_.emplace(a.name, id);
    sys.by_degree_[a.degree].push_back(id);
    sys.into_[index(a.rng)].push_back(id);
    sys.from_[index(a.src)].push_back(id);
  }

  sys.factorizations_.assign(sys.arrows_.size(), {});
  for (const MulEntry& e : entries) {
    const auto x = sys.find_arrow(e.lhs);
    const auto y = sys.find_arrow(e.rhs);
    const auto z = sys.find_arrow(e.product);
    const std::string text = e.lhs + " * " + e.rhs + " = " + e.product;
    if (!x || !y || !z) throw Error(ErrorKind::UnknownArrow, "in entry " + text);
    const Arrow& ax = sys.arrows_[index(*x)];
    const Arrow& ay = sys.arrows_[index(*y)];
    const Arrow& az = sys.arrows_[index(*z)];
    if (ax.src != ay.rng) throw Error(ErrorKind::MalformedEntry, "src(x) != rng(y) in " + text);
    if (az.degree != ax.degree + ay.degree) {
      throw Error(ErrorKind::MalformedEntry, "degrees do not add in " + text);
    }
    if (ax.degree == 0 || ay.degree == 0) {
      sys.unit_entries_.push_back({{*x, *y}, *z});
      continue;
    }
    auto [it, inserted] = sys.table_.emplace(GradedSystem::Factorization{*x, *y}, *z);
    if (!inserted && it->second != *z) {
      throw Error(ErrorKind::MalformedEntry, "conflicting products for " + e.lhs + " * " + e.rhs);
    }
    if (inserted) sys.factorizations_[index(*z)].push_back({*x, *y});
  }
  for (auto& f : sys.factorizations_) std::sort(f.begin(), f.end());
  std::sort(sys.unit_entries_.begin(), sys.unit_entries_.end());
  sys.unit_entries_.erase(std::unique(sys.unit_entries_.begin(), sys.unit_entries_.end()),
                          sys.unit_entries_.end());
  return sys;
}

GradedSystem build_free(const std::vector<ArrowDecl>& generators,
                        const std::vector<std::string>& vertices, std::size_t cap) {
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw Error(ErrorKind::DuplicateName, "repeated vertex");
  for (const ArrowDecl& g : generators) {
    if (!seen.insert(g.name).second) throw Error(ErrorKind::DuplicateName, g.name);
    if (std::find(vertices.begin(), vertices.end(), g.src) == vertices.end()) {
      throw Error(ErrorKind::UnknownVertex, g.src);
    }
    if (std::find(vertices.begin(), vertices.end(), g.rng) == vertices.end()) {
      throw Error(ErrorKind::UnknownVertex, g.rng);
    }
    if (g.degree == 0) throw Error(ErrorKind::MalformedEntry, "generator " + g.name + " has degree 0");
    if (g.degree > cap) {
      throw Error(ErrorKind::CapTooSmall, "generator " + g.name + " has degree " +
                                              std::to_string(g.degree) + " > cap " +
                                              std::to_string(cap));
    }
  }

  // words[d]: generator-index sequences g1..gk with src(g_i) = rng(g_{i+1})
  using Word = std::vector<std::size_t>;
  std::vector<std::vector<Word>> words(cap + 1);
  for (std::size_t g = 0; g < generators.size(); ++g) words[generators[g].degree].push_back({g});
  for (std::size_t d = 1; d <= cap; ++d) {
    for (std::size_t w = 0; w < words[d].size(); ++w) {
      const Word base = words[d][w];
      const std::string& tail_src = generators[base.back()].src;
      for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].rng != tail_src || d + generators[g].degree > cap) continue;
        Word ext = base;
        ext.push_back(g);
        words[d + generators[g].degree].push_back(std::move(ext));
      }
    }
  }

  auto word_name = [&](std::span<const std::size_t> w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += "·";
      out += generators[w[k]].name;
    }
    return out;
  };

  std::vector<ArrowDecl> arrows;
  std::vector<MulEntry> entries;
  for (std::size_t d = 1; d <= cap; ++d) {
    for (const Word& w : words[d]) {
      const std::string name = w.size() == 1 ? generators[w[0]].name : word_name(w);
      arrows.push_back({name, d, generators[w.back()].src, generators[w.front()].rng});
      for (std::size_t split = 1; split < w.size(); ++split) {
        entries.push_back({word_name(std::span(w).first(split)),
                           word_name(std::span(w).subspan(split)), name});
      }
    }
  }
  return GradedSystem::assemble(Mode::Free, cap, vertices, std::move(arrows), entries);
}

GradedSystem build_table(const TableSpec& spec) {
  return GradedSystem::assemble(Mode::Table, spec.cap, spec.vertices, spec.arrows, spec.entries);
}

ValidationReport validate(const GradedSystem& sys) {
  ValidationReport report;
  report.cap = sys.cap();
  auto nm = [&](ArrowId a) { return sys.name(a); };

  // endpoint compatibility
  auto check_endpoints = [&](ArrowId x, ArrowId y, ArrowId z) {
    if (sys.rng(z) != sys.rng(x) || sys.src(z) != sys.src(y)) {
      report.violations.push_back({ViolationKind::EndpointMismatch, {x, y, z},
                                   nm(x) + "*" + nm(y) + "=" + nm(z) +
                                       " but endpoints of the product differ"});
    }
  };
  for (const auto& [xy, z] : sys.table()) check_endpoints(xy.first, xy.second, z);
  for (const auto& [xy, z] : sys.unit_entries()) check_endpoints(xy.first, xy.second, z);

  // injectivity of each degree pair
  for (const Arrow& a : sys.arrows()) {
    const ArrowId z = sys.arrow_id(a.name);
    const auto facts = sys.factorizations(z);
    for (std::size_t i = 0; i < facts.size(); ++i) {
      for (std::size_t j = i + 1; j < facts.size(); ++j) {
        if (sys.degree(facts[i].first) != sys.degree(facts[j].first)) continue;
        const auto [x, y] = facts[i];
        const auto [x2, y2] = facts[j];
        report.violations.push_back(
            {ViolationKind::NotInjective, {x, y, x2, y2, z},
             "(" + nm(x) + "," + nm(y) + ") and (" + nm(x2) + "," + nm(y2) + ") both map to " +
                 nm(z)});
      }
    }
  }

  // totality on composable pairs within the cap
  for (std::size_t n = 1; n <= sys.cap(); ++n) {
    for (ArrowId x : sys.of_degree(n)) {
      for (ArrowId y : sys.arrows_into(sys.src(x))) {
        const std::size_t m = sys.degree(y);
        if (m == 0 || n + m > sys.cap()) continue;
        if (!sys.compose(x, y)) {
          report.violations.push_back({ViolationKind::MissingComposite, {x, y},
                                       nm(x) + "*" + nm(y) + " is composable but undefined"});
        }
      }
    }
  }

  // associativity (x*y)*w = x*(y*w)
  for (const auto& [xy, p] : sys.table()) {
    const auto [x, y] = xy;
    for (ArrowId w : sys.arrows_into(sys.src(y))) {
      if (sys.degree(w) == 0 || sys.degree(p) + sys.degree(w) > sys.cap()) continue;
      const auto lhs = sys.compose(p, w);
      const auto yw = sys.compose(y, w);
      const auto rhs = yw ? sys.compose(x, *yw) : std::nullopt;
      if (lhs && rhs && *lhs != *rhs) {
        report.violations.push_back({ViolationKind::NotAssociative, {x, y, w},
                                     "(" + nm(x) + "*" + nm(y) + ")*" + nm(w) + "=" + nm(*lhs) +
                                         " but " + nm(x) + "*(" + nm(y) + "*" + nm(w) +
                                         ")=" + nm(*rhs)});
      }
    }
  }

  // explicit unit entries must agree with the implicit identities
  for (const auto& [xy, z] : sys.unit_entries()) {
    const auto [x, y] = xy;
    const ArrowId expected = sys.degree(x) == 0 ? y : x;
    if (z != expected) {
      report.violations.push_back({ViolationKind::UnitLaw, {x, y, z},
                                   nm(x) + "*" + nm(y) + "=" + nm(z) + " violates the unit law"});
    }
  }
  return report;
}

PathCategoryVerdict check_path_category(const GradedSystem& sys) {
  const ValidationReport report = validate(sys);
  if (!report.ok()) throw Error(ErrorKind::InvalidSystem, report.violations.front().message);

  const std::size_t count = sys.arrow_count();
  std::vector<bool> irreducible(count, false);
  PathCategoryVerdict verdict;
  verdict.cap = sys.cap();
  for (std::size_t k = 0; k < count; ++k) {
    const ArrowId a = arrow_at(k);
    if (sys.degree(a) > 0 && sys.factorizations(a).empty()) {
      irreducible[k] = true;
      verdict.irreducibles.push_back(a);
    }
  }

  // number of irreducible words for each arrow, saturated at 2; arrows are in
  // degree order, so every suffix is counted before it is used
  std::vector<int> words(count, 0);
  auto contributions = [&](ArrowId z) {
    std::vector<GradedSystem::Factorization> out;
    for (const auto& f : sys.factorizations(z)) {
      if (irreducible[index(f.first)] && words[index(f.second)] > 0) out.push_back(f);
    }
    return out;
  };
  for (std::size_t k = 0; k < count; ++k) {
    const ArrowId z = arrow_at(k);
    if (sys.degree(z) == 0) continue;
    int total = irreducible[k] ? 1 : 0;
    for (const auto& [x, y] : contributions(z)) total = std::min(2, total + words[index(y)]);
    words[k] = total;
  }

  // any single irreducible word for a
  auto one_word = [&](ArrowId a) {
    std::vector<ArrowId> out;
    while (!irreducible[index(a)]) {
      const auto [x, y] = contributions(a).front();
      out.push_back(x);
      a = y;
    }
    out.push_back(a);
    return out;
  };

  for (std::size_t k = 0; k < count; ++k) {
    if (words[k] < 2) continue;
    ArrowId z = arrow_at(k);
    DoubleFactorization w;
    w.arrow = z;
    std::vector<ArrowId> prefix;
    for (;;) {
      const auto cs = contributions(z);
      if (cs.size() >= 2) {
        w.first = prefix;
        w.second = prefix;
        w.first.push_back(cs[0].first);
        w.second.push_back(cs[1].first);
        const auto t1 = one_word(cs[0].second);
        const auto t2 = one_word(cs[1].second);
        w.first.insert(w.first.end(), t1.begin(), t1.end());
        w.second.insert(w.second.end(), t2.begin(), t2.end());
        break;
      }
      prefix.push_back(cs.front().first);
      z = cs.front().second;
    }
    verdict.witness = std::move(w);
    verdict.is_path_category = false;
    return verdict;
  }
  verdict.is_path_category = true;
  return verdict;
}

std::string word_string(const GradedSystem& sys, std::span<const ArrowId> word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += "·";
    out += sys.name(word[k]);
  }
  return out;
}

}  // namespace pps
