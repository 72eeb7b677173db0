#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "preheap/boolean_lattice.hpp"
#include "preheap/heap.hpp"
#include "preheap/oracle.hpp"

using namespace preheap;

TEST_CASE("construction") {
  BooleanLattice one({"p"});
  CHECK(one.elements().size() == 2);
  CHECK(one.bottom().members().empty());
  CHECK(one.top().members() == std::vector<std::string>{"p"});

  CHECK_THROWS_AS(BooleanLattice({"p", "p"}), ValidationError);
  CHECK_THROWS_AS(BooleanLattice({}), ValidationError);
}

TEST_CASE("finite set operations and guards") {
  const std::vector<std::string> u{"p", "q", "r"};
  const FiniteSet pq(u, {"p", "q"});
  const FiniteSet qr(u, {"q", "r"});

  CHECK(pq.intersect(qr) == FiniteSet(u, {"q"}));
  CHECK(pq.unite(qr) == FiniteSet::full(u));
  CHECK(pq.complement() == FiniteSet(u, {"r"}));
  CHECK(FiniteSet(u, {"q"}).subset_of(pq));
  CHECK(!pq.subset_of(qr));
  CHECK(pq.contains("q"));
  CHECK(!pq.contains("r"));

  const FiniteSet other(std::vector<std::string>{"p", "q"}, {"p"});
  CHECK_THROWS_AS((void)pq.intersect(other), ValidationError);
  CHECK_THROWS_AS((void)FiniteSet(u, {"z"}), ValidationError);
}

TEST_CASE("lattice axioms hold up to universe size 4") {
  const std::vector<std::string> names{"p", "q", "r", "s"};
  for (std::size_t n = 1; n <= 4; ++n) {
    BooleanLattice l(std::vector<std::string>(names.begin(), names.begin() + n));
    CHECK(check_axioms(l).ok());
  }
}

TEST_CASE("quotient equals implication, confirmed by the oracle") {
  BooleanLattice l({"p", "q"});
  for (const auto& a : l.elements()) {
    for (const auto& b : l.elements()) {
      CHECK(quotient_right(l, a, b) == l.gamma(a).unite(b));
      CHECK(verify_quotient(l, a, b, Side::Right));
    }
  }
}

TEST_CASE("top is the mu identity and bottom the tau identity") {
  BooleanLattice l({"p", "q", "r"});
  const auto probe = identity_probe(l);
  REQUIRE(probe.has_value());
  CHECK(probe->identity == l.top());
  CHECK(probe->report.ok());
}
