#include <doctest.h>

#include <algorithm>
#include <set>

#include "pps/error.hpp"
#include "pps/fock.hpp"
#include "pps/ideals.hpp"
#include "support/test_support.hpp"

using namespace pps;
using namespace pps::testing;

namespace {

std::set<std::string> positive_arrows(const GradedSystem& sys) {
  std::set<std::string> out;
  for (std::size_t k = sys.vertex_count(); k < sys.arrow_count(); ++k) out.insert(sys.name(arrow_at(k)));
  return out;
}

// Every subset, kept when no arrow leaves it backwards.
std::vector<IdealMask> brute_force_invariant(const GradedSystem& sys) {
  std::vector<IdealMask> out;
  const std::size_t n = sys.vertex_count();
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    IdealMask m;
    for (std::size_t v = 0; v < n; ++v) {
      if (bits >> v & 1U) m.insert(vertex_at(v));
    }
    bool ok = true;
    for (std::size_t k = 0; k < sys.arrow_count(); ++k) {
      const ArrowId e = arrow_at(k);
      if (m.contains(sys.rng(e)) && !m.contains(sys.src(e))) ok = false;
    }
    if (ok) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FixedPointElement loop_ck() {
  const GradedSystem sys = single_loop(6);
  FixedPointElement x;
  x.blocks.resize(2);
  accumulate(x.blocks[0], A(sys, "v"), A(sys, "v"), 1);
  accumulate(x.blocks[1], A(sys, "f"), A(sys, "f"), -1);
  return x;
}

}  // namespace

TEST_CASE("invariance") {
  const GradedSystem sys = square_free(4);
  CHECK(is_invariant(sys, mask(sys, {"v0"})));
  CHECK_FALSE(is_invariant(sys, mask(sys, {"v3"})));
  CHECK(sys.name(*invariance_witness(sys, mask(sys, {"v3"}))) == "a");
  CHECK(is_invariant(sys, IdealMask()));
  CHECK(is_invariant(sys, IdealMask::full(sys)));
  CHECK_FALSE(invariance_witness(sys, mask(sys, {"v0", "v1"})).has_value());
  CHECK_THROWS_AS(is_invariant(sys, IdealMask({vertex_at(9)})), Error);
}

TEST_CASE("the square has six invariant ideals") {
  for (const GradedSystem& sys : {square_free(4), square_table()}) {
    const std::vector<IdealMask> got = enumerate_invariant(sys);
    const std::vector<IdealMask> want{IdealMask(),
                                      mask(sys, {"v0"}),
                                      mask(sys, {"v0", "v1"}),
                                      mask(sys, {"v0", "v2"}),
                                      mask(sys, {"v0", "v1", "v2"}),
                                      IdealMask::full(sys)};
    CHECK(got == want);
    CHECK(got == brute_force_invariant(sys));
  }
}

TEST_CASE("invariant ideals of small systems") {
  CHECK(enumerate_invariant(single_loop(3)).size() == 2);
  CHECK(enumerate_invariant(edgeless(2)).size() == 4);
  CHECK_THROWS_AS(enumerate_invariant(edgeless(3), 2), Error);
}

TEST_CASE("hereditary restriction keeps arrows inside the subset") {
  const GradedSystem sys = square_free(4);
  const GradedSystem r = restrict_hereditary(sys, mask(sys, {"v0", "v1", "v2"}));
  CHECK(r.vertex_count() == 3);
  CHECK(positive_arrows(r) == std::set<std::string>{"b", "d"});
  CHECK(validate(r).ok());
  CHECK(restrict_hereditary(sys, IdealMask::full(sys)).arrow_count() == sys.arrow_count());
  CHECK(restrict_hereditary(sys, IdealMask()).arrow_count() == 0);
}

TEST_CASE("quotients delete the ideal and every arrow out of it") {
  const GradedSystem sys = square_free(4);
  const GradedSystem q = quotient(sys, mask(sys, {"v0"}));
  CHECK(positive_arrows(q) == std::set<std::string>{"a", "c"});
  CHECK(validate(q).ok());
  CHECK(quotient(sys, IdealMask()).arrow_count() == sys.arrow_count());
  const GradedSystem loop = single_loop(4);
  CHECK(quotient(loop, IdealMask::full(loop)).arrow_count() == 0);
  try {
    (void)quotient(sys, mask(sys, {"v3"}));
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
  }
}

TEST_CASE("quotients of the table square revalidate") {
  const GradedSystem sys = square_table();
  for (const IdealMask& W : enumerate_invariant(sys)) {
    const GradedSystem q = quotient(sys, W);
    CHECK(validate(q).ok());
  }
}

TEST_CASE("katsura ideal") {
  const GradedSystem sq = square_free(4);
  CHECK(katsura_ideal(sq) == mask(sq, {"v1", "v2", "v3"}));
  CHECK(katsura_ideal(square_table()) == mask(square_table(), {"v1", "v2", "v3"}));
  const GradedSystem loop = single_loop(2);
  CHECK(katsura_ideal(loop) == IdealMask::full(loop));
  CHECK(katsura_ideal(edgeless(3)).empty());
}

TEST_CASE("gauge ideal specs need I ⊆ J with I invariant") {
  const GradedSystem sys = square_free(4);
  CHECK_NOTHROW(GaugeIdealSpec(sys, mask(sys, {"v0"}), mask(sys, {"v0", "v3"})));
  CHECK_THROWS_AS(GaugeIdealSpec(sys, mask(sys, {"v0", "v1"}), mask(sys, {"v0"})), Error);
  CHECK_THROWS_AS(GaugeIdealSpec(sys, mask(sys, {"v3"}), mask(sys, {"v3"})), Error);
}

TEST_CASE("kernel membership on the single loop") {
  const GradedSystem sys = single_loop(6);
  const FixedPointElement x = loop_ck();
  const MembershipVerdict ok = kernel_membership(sys, x, GaugeIdealSpec(sys, IdealMask(), mask(sys, {"v"})), 5);
  CHECK(ok.verified);
  CHECK(ok.horizon == 5);

  const MembershipVerdict bad = kernel_membership(sys, x, GaugeIdealSpec(sys, IdealMask(), IdealMask()), 5);
  REQUIRE_FALSE(bad.verified);
  CHECK(bad.degree == 0);
  CHECK(sys.name(bad.output) == "v");
  CHECK(sys.name(bad.basis) == "v");
  CHECK(bad.coefficient == Scalar(1));

  const GaugeIdealSpec none(sys, IdealMask(), IdealMask());
  CHECK_THROWS_AS(kernel_membership(sys, x, none, 0), Error);  // horizon below the top degree
  CHECK_THROWS_AS(kernel_membership(sys, x, none, 7), Error);  // beyond the cap
}

TEST_CASE("Cuntz–Krieger elements") {
  const GradedSystem sys = square_free(8);
  const FixedPointElement x = cuntz_krieger_element(sys, V(sys, "v3"));
  REQUIRE(x.blocks.size() == 3);
  CHECK(x.blocks[0] == CompactBlock{{{A(sys, "v3"), A(sys, "v3")}, 1}});
  CHECK(x.blocks[1] == CompactBlock{{{A(sys, "a"), A(sys, "a")}, -1}});
  CHECK(x.blocks[2] == CompactBlock{{{A(sys, "c"), A(sys, "c")}, -1}});
  const GaugeIdealSpec spec(sys, IdealMask(), katsura_ideal(sys));
  CHECK(kernel_membership(sys, x, spec, 8).verified);
}

TEST_CASE("ck relations") {
  const CkReport sq = ck_relations(square_free(8), 8);
  CHECK(sq.all_verified());
  CHECK(sq.vertices.size() == 3);
  const CkReport loop = ck_relations(single_loop(10), 10);
  CHECK(loop.all_verified());
  CHECK(loop.vertices.size() == 1);
  CHECK(ck_relations(edgeless(2), 2).vertices.empty());
  CHECK_THROWS_AS(ck_relations(square_table(), 4), Error);
}

TEST_CASE("dropping a summand breaks the Cuntz–Krieger relation") {
  const GradedSystem sys = square_free(8);
  FixedPointElement x = cuntz_krieger_element(sys, V(sys, "v3"));
  x.blocks[2].clear();  // forget |c⟩⟨c|
  const MembershipVerdict v = kernel_membership(sys, x, GaugeIdealSpec(sys, IdealMask(), katsura_ideal(sys)), 8);
  REQUIRE_FALSE(v.verified);
  CHECK(v.degree == 2);
  CHECK(sys.name(v.output) == "c");
}

TEST_CASE("J_max") {
  const GradedSystem loop = single_loop(5);
  const JmaxResult a = jmax_global(loop);
  CHECK(a.global);
  CHECK(a.mask == IdealMask::full(loop));

  const GradedSystem sq = square_free(4);
  const JmaxResult b = jmax_global(sq);
  CHECK_FALSE(b.global);
  REQUIRE(b.witness.has_value());
  CHECK(sq.name(*b.witness) == "c");
  CHECK(b.n == 1);
  CHECK(b.m == 1);

  const JmaxResult c = jmax_global(edgeless(2));
  CHECK(c.global);
  CHECK(c.mask.empty());
}
