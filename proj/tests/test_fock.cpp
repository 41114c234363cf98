#include <doctest.h>

#include "pps/error.hpp"
#include "pps/fock.hpp"
#include "support/test_support.hpp"

using namespace pps;
using namespace pps::testing;

namespace {

FockVector at(const GradedSystem& sys, const std::string& name) { return basis_vector(A(sys, name)); }

BlockMap S(const GradedSystem& sys, std::size_t N, const std::string& name) {
  return creation_operator(sys, N, Element::delta(sys, A(sys, name)));
}

}  // namespace

TEST_CASE("the truncated Fock basis is a prefix of the arrow list") {
  const GradedSystem sys = square_table();
  const TruncatedFock f2(sys, 2);
  CHECK(f2.dimension() == 4 + 1 + 2);  // vertices, a, c and d
  CHECK(f2.block(2).size() == 2);
  CHECK(TruncatedFock(sys, 4).dimension() == sys.arrow_count());
  CHECK_THROWS_AS(TruncatedFock(sys, 5), Error);
}

TEST_CASE("creation operators on the square") {
  const GradedSystem sys = square_table();
  const BlockMap sc = S(sys, 4, "c");
  CHECK(sc.shift() == 2);
  CHECK(sc.apply(at(sys, "d")) == at(sys, "e"));
  CHECK(sc.apply(at(sys, "v2")) == at(sys, "c"));
  CHECK(sc.apply(at(sys, "b")).empty());

  const BlockMap sa = S(sys, 4, "a");
  CHECK(sa.apply(at(sys, "v1")) == at(sys, "a"));
  CHECK(sa.apply(at(sys, "b")) == at(sys, "e"));
  CHECK(sa.apply(at(sys, "v0")).empty());

  const BlockMap sa_star = sa.adjoint();
  CHECK(sa_star.shift() == -1);
  CHECK(sa_star.apply(at(sys, "e")) == at(sys, "b"));
  CHECK(sa_star.apply(at(sys, "a")) == at(sys, "v1"));
  CHECK(sa_star.apply(at(sys, "c")).empty());
  CHECK(sa_star.adjoint() == sa);

  CHECK_THROWS_AS(S(sys, 2, "b"), Error);
}

TEST_CASE("creation operators are linear in the element") {
  const GradedSystem sys = square_free(6);
  Element x = Element::zero(2);
  x.add(A(sys, "c"), Scalar(3));
  x.add(A(sys, "d"), Scalar::i());
  const BlockMap sx = creation_operator(sys, 6, x);
  const SparseMatrix expected = Scalar(3) * S(sys, 6, "c").to_matrix() + Scalar::i() * S(sys, 6, "d").to_matrix();
  CHECK(sx.to_matrix() == expected);
}

TEST_CASE("left action by vertex functions") {
  const GradedSystem sys = square_table();
  const BlockMap p = left_action_operator(sys, 4, indicator(V(sys, "v3"), Scalar(5)));
  CHECK(p.apply(at(sys, "e")) == FockVector{{static_cast<std::size_t>(A(sys, "e")), Scalar(5)}});
  CHECK(p.apply(at(sys, "b")).empty());
  CHECK(p.apply(at(sys, "v3")) == FockVector{{static_cast<std::size_t>(A(sys, "v3")), Scalar(5)}});
}

TEST_CASE("block maps compose by adding shifts") {
  const GradedSystem sys = square_free(6);
  const BlockMap prod = S(sys, 6, "a") * S(sys, 6, "b");
  CHECK(prod.shift() == 4);
  CHECK(prod == S(sys, 6, "a·b"));
  CHECK(prod.restrict_source(0).apply(at(sys, "v0")) == at(sys, "a·b"));
  CHECK(prod.restrict_source(0).block(1).is_zero());
}

TEST_CASE("⟨S(x)ξ|η⟩ = ⟨ξ|S(x)*η⟩ on basis vectors") {
  const GradedSystem sys = square_free(6);
  const SparseMatrix s = S(sys, 6, "c").to_matrix();
  const SparseMatrix t = S(sys, 6, "c").adjoint().to_matrix();
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) CHECK(s.at(r, c) == t.at(c, r).conj());
  }
}

TEST_CASE("weak representation on the square and on free systems") {
  const GradedSystem sq = square_table();
  CHECK(check_weak_representation(sq, 4).ok);
  CHECK(check_weak_representation(square_free(8), 8).ok);
  CHECK(check_weak_representation(single_loop(6), 6).ok);
  CHECK_THROWS_AS(check_weak_representation(sq, 7), Error);
}

TEST_CASE("the commutative square violates the representation condition") {
  const GradedSystem sys = square_table();
  const RepConditionVerdict v = check_representation_condition(sys, 4);
  REQUIRE_FALSE(v.ok);
  const RepWitness& w = *v.witness;
  CHECK(w.n == 1);
  CHECK(w.m == 2);
  CHECK(sys.name(w.x) == "a");
  CHECK(sys.name(w.y) == "c");
  CHECK(w.k == 2);
  CHECK(sys.name(w.basis) == "d");
  CHECK(w.lhs == at(sys, "b"));
  CHECK(w.rhs.empty());
}

TEST_CASE("free systems satisfy the representation condition") {
  CHECK(check_representation_condition(square_free(8), 8).ok);
  CHECK(check_representation_condition(single_loop(8), 8).ok);
  CHECK(check_representation_condition(cc_bimodule(2), 2).ok);
  // below the degree where the square's two factorizations meet, nothing can fail
  CHECK(check_representation_condition(square_table(), 3).ok);
}

TEST_CASE("representation checks require a valid system") {
  TableSpec spec;
  spec.cap = 2;
  spec.vertices = {"v"};
  spec.arrows = {{"f", 1, "v", "v"}, {"g", 2, "v", "v"}};
  const GradedSystem bad = build_table(spec);
  CHECK_THROWS_AS(check_representation_condition(bad, 2), Error);
  CHECK_THROWS_AS(check_weak_representation(bad, 2), Error);
}
