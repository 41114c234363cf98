#include <doctest.h>

#include "pps/error.hpp"
#include "pps/fell.hpp"
#include "pps/ideals.hpp"
#include "support/test_support.hpp"

using namespace pps;
using namespace pps::testing;

namespace {

FellBasis arr(const GradedSystem& sys, const std::string& name) { return {A(sys, name), false}; }
FellBasis adj(const GradedSystem& sys, const std::string& name) { return {A(sys, name), true}; }
FellVector one(const FellBasis& b) { return {{b, Scalar(1)}}; }

GradedSystem two_loops(std::size_t cap) {
  return build_free({{"f", 1, "u", "u"}, {"g", 1, "v", "v"}}, {"u", "v"}, cap);
}

}  // namespace

TEST_CASE("C+C does not extend: the left condition fails at (1,2)") {
  const GradedSystem sys = cc_bimodule(2);
  const ExtendVerdict v = check_extendable(sys);
  CHECK_FALSE(v.extendable);
  CHECK(v.n == 1);
  CHECK(v.m == 2);
  CHECK(v.condition == FellCondition::Left);
  REQUIRE(v.arrows.size() == 1);
  CHECK(sys.name(v.arrows[0]) == "x2");
  CHECK_THROWS_AS(build_fell(sys, 2), Error);
}

TEST_CASE("loops extend") {
  CHECK(check_extendable(single_loop(6)).extendable);
  CHECK(check_extendable(two_loops(4)).extendable);
  CHECK(check_extendable(edgeless(2, 3)).extendable);
}

TEST_CASE("the free square does not extend") {
  const GradedSystem sys = square_free(4);
  const ExtendVerdict v = check_extendable(sys);
  CHECK_FALSE(v.extendable);
  CHECK(v.n == 1);
  CHECK(v.m == 2);
  CHECK(v.condition == FellCondition::Left);
  CHECK(sys.name(v.arrows.at(0)) == "c");
  CHECK_THROWS_AS(check_extendable(square_table()), Error);
}

TEST_CASE("non-extendable witnesses are stable as the cap grows") {
  const ExtendVerdict small = check_extendable(square_free(4));
  for (std::size_t cap = 5; cap <= 8; ++cap) {
    const GradedSystem sys = square_free(cap);
    const ExtendVerdict v = check_extendable(sys);
    CHECK(v.n == small.n);
    CHECK(v.m == small.m);
    CHECK(v.condition == small.condition);
    CHECK(sys.name(v.arrows.at(0)) == "c");
  }
}

TEST_CASE("a fork fails the bimodule requirement") {
  const GradedSystem sys = build_free({{"p", 1, "u", "w"}, {"q", 1, "v", "w"}}, {"u", "v", "w"}, 2);
  const ExtendVerdict v = check_extendable(sys);
  CHECK_FALSE(v.extendable);
  CHECK(v.condition == FellCondition::Bimodule);
  CHECK(v.m == 1);
  CHECK(v.arrows.size() == 2);
  CHECK(to_string(FellCondition::Bimodule) == "bimodule");
}

TEST_CASE("the single-loop bundle") {
  const GradedSystem sys = single_loop(4);
  const FellBundle b = build_fell(sys, 2);
  CHECK(b.degree_bound() == 2);
  CHECK(b.fiber(0) == std::vector<FellBasis>{arr(sys, "v")});
  CHECK(b.fiber(-1) == std::vector<FellBasis>{adj(sys, "f")});
  CHECK(b.fiber(3).empty());
  CHECK(b.basis().size() == 5);

  CHECK(b.multiply(adj(sys, "f"), arr(sys, "f")) == one(arr(sys, "v")));
  CHECK(b.multiply(arr(sys, "f"), adj(sys, "f")) == one(arr(sys, "v")));
  CHECK(b.multiply(adj(sys, "f"), arr(sys, "f·f")) == one(arr(sys, "f")));
  CHECK(b.multiply(adj(sys, "f·f"), arr(sys, "f")) == one(adj(sys, "f")));
  CHECK(b.multiply(arr(sys, "f"), arr(sys, "f")) == one(arr(sys, "f·f")));
  CHECK(b.multiply(adj(sys, "f"), adj(sys, "f")) == one(adj(sys, "f·f")));
  CHECK(b.multiply(arr(sys, "f·f"), arr(sys, "f")).empty());  // degree 3 > D

  CHECK(b.star(arr(sys, "v")) == arr(sys, "v"));
  CHECK(b.star(arr(sys, "f")) == adj(sys, "f"));
  CHECK(b.degree(adj(sys, "f·f")) == -2);
  CHECK(b.name(adj(sys, "f")) == "f*");

  const FellVector x{{arr(sys, "f"), Scalar(2)}, {arr(sys, "v"), Scalar::i()}};
  CHECK(b.star(x) == FellVector{{adj(sys, "f"), Scalar(2)}, {arr(sys, "v"), -Scalar::i()}});
  // (2f + i)·f* = 2 + i f*
  CHECK(b.multiply(x, one(adj(sys, "f"))) ==
        FellVector{{arr(sys, "v"), Scalar(2)}, {adj(sys, "f"), Scalar::i()}});
  CHECK_THROWS_AS(build_fell(sys, 5), Error);
}

TEST_CASE("Fell axioms hold for extendable systems") {
  const FellBundle loop = build_fell(single_loop(4), 4);
  const FellAxiomReport r = verify_fell_axioms(loop);
  CHECK(r.ok);
  CHECK(r.failed_axiom.empty());
  CHECK(verify_fell_axioms(build_fell(two_loops(3), 3)).ok);
  CHECK(verify_fell_axioms(build_fell(edgeless(2, 2), 2)).ok);
}

TEST_CASE("covariance ideal of the bundle") {
  const GradedSystem loop = single_loop(4);
  CHECK(fell_covariance_ideal(build_fell(loop, 4)) == IdealMask::full(loop));
  CHECK(fell_covariance_ideal(build_fell(loop, 4)) == katsura_ideal(loop));
  const GradedSystem two = two_loops(3);
  CHECK(fell_covariance_ideal(build_fell(two, 2)) == mask(two, {"u", "v"}));
  CHECK(fell_covariance_ideal(build_fell(edgeless(2, 2), 2)).empty());
}

TEST_CASE("products land in the fiber of the summed degree") {
  const FellBundle b = build_fell(single_loop(4), 4);
  for (const auto& [key, value] : b.table()) {
    CHECK(b.degree(value.first) == b.degree(key.first) + b.degree(key.second));
  }
}
