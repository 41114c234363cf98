#include "pps/fell.hpp"

#include "pps/error.hpp"
#include "pps/toeplitz.hpp"

namespace pps {

std::string_view to_string(FellCondition c) {
  switch (c) {
    case FellCondition::Bimodule: return "bimodule";
    case FellCondition::Left: return "left";
    case FellCondition::Right: return "right";
  }
  return "unknown";
}

ExtendVerdict check_extendable(const GradedSystem& sys) {
  ToeplitzAlgebra guard(sys);  // throws NotPathCategory
  ExtendVerdict verdict;
  auto fail = [&](std::size_t n, std::size_t m, FellCondition c, std::vector<ArrowId> arrows) {
    verdict.extendable = false;
    verdict.n = n;
    verdict.m = m;
    verdict.condition = c;
    verdict.arrows = std::move(arrows);
    return verdict;
  };

  for (std::size_t m = 1; m <= sys.cap(); ++m) {
    const BimoduleVerdict bimodule = hilbert_bimodule_check(sys, m);
    if (!bimodule.ok) {
      return fail(m, m, FellCondition::Bimodule, {bimodule.clash->first, bimodule.clash->second});
    }
    for (std::size_t n = 1; n <= m; ++n) {
      // E_n has injective range and source maps (checked at an earlier m)
      std::map<VertexId, ArrowId> by_range;
      std::map<VertexId, ArrowId> by_source;
      for (ArrowId e : sys.of_degree(n)) {
        by_range.emplace(sys.rng(e), e);
        by_source.emplace(sys.src(e), e);
      }
      for (ArrowId t : sys.of_degree(m)) {
        auto e = by_range.find(sys.rng(t));
        if (e != by_range.end() && !sys.left_quotient(t, e->second)) {
          return fail(n, m, FellCondition::Left, {t});
        }
      }
      for (ArrowId t : sys.of_degree(m)) {
        auto e = by_source.find(sys.src(t));
        if (e != by_source.end() && !sys.right_quotient(t, e->second)) {
          return fail(n, m, FellCondition::Right, {t});
        }
      }
    }
  }
  return verdict;
}

std::vector<FellBasis> FellBundle::fiber(long n) const {
  std::vector<FellBasis> out;
  const std::size_t d = static_cast<std::size_t>(n < 0 ? -n : n);
  if (d > D_) return out;
  for (ArrowId a : sys_.of_degree(d)) out.push_back({a, n < 0});
  return out;
}

std::vector<FellBasis> FellBundle::basis() const {
  std::vector<FellBasis> out;
  const long D = static_cast<long>(D_);
  for (long n = -D; n <= D; ++n) {
    for (const FellBasis& b : fiber(n)) out.push_back(b);
  }
  return out;
}

long FellBundle::degree(const FellBasis& b) const {
  const long d = static_cast<long>(sys_.degree(b.arrow));
  return b.star ? -d : d;
}

FellBasis FellBundle::star(const FellBasis& b) const {
  if (sys_.degree(b.arrow) == 0) return b;
  return {b.arrow, !b.star};
}

FellVector FellBundle::multiply(const FellBasis& x, const FellBasis& y) const {
  auto it = table_.find({x, y});
  if (it == table_.end()) return {};
  return FellVector{{it->second.first, it->second.second}};
}

FellVector FellBundle::multiply(const FellVector& x, const FellVector& y) const {
  FellVector out;
  for (const auto& [a, c] : x) {
    for (const auto& [b, d] : y) {
      for (const auto& [p, w] : multiply(a, b)) {
        Scalar v = c * d * w;
        auto [it, inserted] = out.emplace(p, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

FellVector FellBundle::star(const FellVector& x) const {
  FellVector out;
  for (const auto& [b, c] : x) out.emplace(star(b), c.conj());
  return out;
}

std::string FellBundle::name(const FellBasis& b) const {
  return b.star ? sys_.name(b.arrow) + "*" : sys_.name(b.arrow);
}

FellBundle build_fell(const GradedSystem& sys, std::size_t D) {
  if (D > sys.cap()) {
    throw Error(ErrorKind::CapExceeded,
                "degree bound " + std::to_string(D) + " exceeds cap " + std::to_string(sys.cap()));
  }
  const ExtendVerdict verdict = check_extendable(sys);
  if (!verdict.extendable) {
    throw Error(ErrorKind::NotExtendable,
                "condition " + std::string(to_string(verdict.condition)) + " fails at (n,m) = (" +
                    std::to_string(verdict.n) + "," + std::to_string(verdict.m) + ")");
  }
  FellBundle bundle(sys, D);
  const long bound = static_cast<long>(D);
  auto positive = [&](ArrowId a) { return FellBasis{a, false}; };
  auto adjoint = [&](ArrowId a) { return bundle.star(FellBasis{a, false}); };

  const std::vector<FellBasis> basis = bundle.basis();
  for (const FellBasis& x : basis) {
    for (const FellBasis& y : basis) {
      const long d = bundle.degree(x) + bundle.degree(y);
      if (d < -bound || d > bound) continue;
      const ArrowId a = x.arrow;
      const ArrowId b = y.arrow;
      std::optional<FellBasis> result;
      if (!x.star && !y.star) {
        if (auto ab = sys.compose(a, b)) result = positive(*ab);
      } else if (x.star && y.star) {
        if (auto ba = sys.compose(b, a)) result = adjoint(*ba);  // a*b* = (ba)*
      } else if (x.star) {
        if (auto z = sys.left_quotient(b, a)) {
          result = positive(*z);  // a*(a z) = z
        } else if (auto z2 = sys.left_quotient(a, b)) {
          result = adjoint(*z2);  // (b z)* b = z*
        }
      } else {
        if (auto w = sys.right_quotient(a, b)) {
          result = positive(*w);  // (w b) b* = w
        } else if (auto w2 = sys.right_quotient(b, a)) {
          result = adjoint(*w2);  // a (w a)* = w*
        }
      }
      if (result) bundle.table_.emplace(std::make_pair(x, y), std::make_pair(*result, Scalar(1)));
    }
  }
  return bundle;
}

FellAxiomReport verify_fell_axioms(const FellBundle& bundle) {
  FellAxiomReport report;
  const GradedSystem& sys = bundle.system();
  const long D = static_cast<long>(bundle.degree_bound());
  auto fail = [&](std::string axiom, std::vector<FellBasis> witness, std::string detail) {
    report.ok = false;
    report.failed_axiom = std::move(axiom);
    report.witness = std::move(witness);
    report.detail = std::move(detail);
    return report;
  };
  auto in_range = [&](long d) { return -D <= d && d <= D; };
  auto one = [](const FellBasis& b) { return FellVector{{b, Scalar(1)}}; };
  const std::vector<FellBasis> basis = bundle.basis();

  for (const auto& [xy, result] : bundle.table()) {
    if (bundle.degree(result.first) != bundle.degree(xy.first) + bundle.degree(xy.second)) {
      return fail("grading", {xy.first, xy.second}, "product lands in the wrong fiber");
    }
  }

  for (const FellBasis& x : basis) {
    for (const FellBasis& y : basis) {
      const long dxy = bundle.degree(x) + bundle.degree(y);
      if (!in_range(dxy)) continue;
      const FellVector xy = bundle.multiply(x, y);
      if (bundle.star(xy) != bundle.multiply(bundle.star(one(y)), bundle.star(one(x)))) {
        return fail("involution", {x, y}, "(xy)* differs from y*x*");
      }
      for (const FellBasis& z : basis) {
        const long dyz = bundle.degree(y) + bundle.degree(z);
        if (!in_range(dyz) || !in_range(dxy + bundle.degree(z))) continue;
        if (bundle.multiply(xy, one(z)) != bundle.multiply(one(x), bundle.multiply(y, z))) {
          return fail("associativity", {x, y, z}, "(xy)z differs from x(yz)");
        }
      }
    }
  }

  for (const FellBasis& x : basis) {
    const FellVector p = bundle.multiply(bundle.star(x), x);
    for (const auto& [b, c] : p) {
      if (bundle.degree(b) != 0 || !c.is_real() || sgn(c.re()) < 0) {
        return fail("positivity", {x}, "x*x is not a non-negative element of B_0");
      }
    }
    if (p.empty()) return fail("positivity", {x}, "x*x vanishes for a non-zero basis vector");
  }

  for (const FellBasis& x : bundle.fiber(0)) {
    if (bundle.star(x) != x) return fail("involution", {x}, "an identity is not self-adjoint");
  }
  for (long n = 0; n <= D; ++n) {
    for (long m = 0; n + m <= D; ++m) {
      for (const FellBasis& x : bundle.fiber(n)) {
        for (const FellBasis& y : bundle.fiber(m)) {
          FellVector expected;
          if (auto xy = sys.compose(x.arrow, y.arrow)) expected = one({*xy, false});
          if (bundle.multiply(x, y) != expected) {
            return fail("restriction", {x, y}, "product differs from the system's composition");
          }
        }
      }
    }
  }
  return report;
}

IdealMask fell_covariance_ideal(const FellBundle& bundle) {
  IdealMask mask;
  const GradedSystem& sys = bundle.system();
  for (long n = 1; n <= static_cast<long>(bundle.degree_bound()); ++n) {
    for (const FellBasis& e : bundle.fiber(n)) {
      for (const auto& [b, c] : bundle.multiply(e, bundle.star(e))) {
        if (!c.is_zero()) mask.insert(sys.src(b.arrow));
      }
    }
  }
  return mask;
}

}  // namespace pps
