#include "chromod/dyck.hpp"

#include <set>

#include "doctest.h"

using namespace chromod;

namespace {

Hess H(std::vector<int> v) { return Hess(std::move(v)); }

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(H({2, 3, 3}));
  CHECK_NOTHROW(H({1, 3, 3}));
  CHECK_NOTHROW(H({2, 2, 3}));
  CHECK_THROWS_WITH_AS(H({3, 2, 3}), doctest::Contains("index 2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(H({1, 1, 3}), doctest::Contains("h(2)=1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(H({2, 3, 4}), doctest::Contains("h(3)=4"),
                       std::invalid_argument);
}

TEST_CASE("words") {
  CHECK(H({2, 3, 3}).to_word() == "nnenee");
  CHECK(Hess::from_word("nnenee") == H({2, 3, 3}));
  CHECK(H({1, 2, 3}).to_word() == "nenene");
  CHECK(Hess::from_word("nnneee") == H({3, 3, 3}));
  CHECK_THROWS_WITH_AS(Hess::from_word("ennnee"), doctest::Contains("position 1"),
                       std::invalid_argument);
  CHECK_THROWS_AS(Hess::from_word("nne"), std::invalid_argument);
  CHECK_THROWS_AS(Hess::from_word("nxee"), std::invalid_argument);
  for (const Hess& h : enumerate_hess(6)) CHECK(Hess::from_word(h.to_word()) == h);
}

TEST_CASE("product") {
  CHECK(Hess::complete(2) * Hess::complete(3) == H({2, 2, 5, 5, 5}));
  CHECK(H({2, 2}) * H({1}) == H({2, 2, 3}));
  Hess unit{std::vector<int>{}};
  CHECK(H({2, 3, 3}) * unit == H({2, 3, 3}));
  CHECK(unit * H({2, 3, 3}) == H({2, 3, 3}));
}

TEST_CASE("transpose") {
  CHECK(Hess::complete(4).transposed() == Hess::complete(4));
  CHECK(H({2, 3, 3}).transposed() == H({2, 3, 3}));
  CHECK(H({3, 3, 4, 5, 5}).transposed() == H({2, 3, 5, 5, 5}));
  CHECK(H({2, 3, 5, 5, 5}).transposed() == H({3, 3, 4, 5, 5}));
  for (int n = 1; n <= 8; ++n)
    for_each_hess(n, [](const Hess& h) { CHECK(h.transposed().transposed() == h); });
}

TEST_CASE("irreducible components") {
  auto comps = H({1, 2, 3}).irreducible_components();
  REQUIRE(comps.size() == 3);
  for (const auto& c : comps) CHECK(c == H({1}));
  comps = Hess::complete(5).irreducible_components();
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == Hess::complete(5));
  comps = H({2, 2, 5, 5, 5}).irreducible_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == H({2, 2}));
  CHECK(comps[1] == H({3, 3, 3}));
  for (int n = 1; n <= 7; ++n)
    for_each_hess(n, [](const Hess& h) {
      Hess prod{std::vector<int>{}};
      for (const auto& c : h.irreducible_components()) prod = prod * c;
      CHECK(prod == h);
    });
}

TEST_CASE("aligned predicate") {
  CHECK(H({2, 3, 3}).is_aligned());
  CHECK_FALSE(H({2, 4, 4, 5, 5}).is_aligned());
  CHECK(Hess::complete(6).is_aligned());
  // aligned is a per-component condition: both components of (2,3,3)*(1)
  // are aligned, so the product is
  CHECK(H({2, 3, 3, 4}).is_aligned());
}

TEST_CASE("abelian predicate") {
  CHECK(H({3, 5, 5, 6, 6, 6}).is_abelian());
  CHECK_FALSE(H({2, 4, 4, 5, 5}).is_abelian());
  CHECK(Hess::complete(5).is_abelian());
  CHECK(H({2, 3, 3}).is_abelian());
  CHECK_FALSE(H({1, 2, 3}).is_abelian());
}

TEST_CASE("area sequence") {
  CHECK(H({2, 4, 4, 5, 5}).area_sequence() == std::vector<int>{1, 2, 1, 1, 0});
  CHECK(H({3, 3, 4, 5, 5}).area_sequence() == std::vector<int>{2, 1, 1, 1, 0});
  CHECK(Hess::complete(4).area_sequence() == std::vector<int>{3, 2, 1, 0});
  // transposing permutes the area sequence
  for (int n = 1; n <= 7; ++n)
    for_each_hess(n, [](const Hess& h) {
      auto a = h.area_sequence();
      auto b = h.transposed().area_sequence();
      std::multiset<int> ma(a.begin(), a.end()), mb(b.begin(), b.end());
      CHECK(ma == mb);
    });
}

TEST_CASE("complete products") {
  CHECK(Hess::complete_product(Partition({3, 1})) == H({3, 3, 3, 4}));
  CHECK_FALSE(H({2, 3, 3}).as_complete_product().has_value());
  auto p = H({2, 2, 5, 5, 5}).as_complete_product();
  REQUIRE(p.has_value());
  CHECK(*p == Partition({3, 2}));
  p = Hess::complete(4).as_complete_product();
  REQUIRE(p.has_value());
  CHECK(*p == Partition({4}));
  // round trip through the sorted key
  for (const Hess& h : enumerate_hess(6)) {
    auto q = h.as_complete_product();
    if (q.has_value())
      CHECK(Hess::complete_product(*q).as_complete_product() == q);
  }
}

TEST_CASE("enumeration counts") {
  for (int n = 1; n <= 10; ++n) {
    std::set<Hess> seen;
    long count = 0;
    for_each_hess(n, [&](const Hess& h) {
      ++count;
      if (n <= 7) seen.insert(h);
    });
    CHECK(count == catalan(n));
    if (n <= 7) CHECK(static_cast<long>(seen.size()) == count);
  }
  CHECK_THROWS_AS(for_each_hess(0, [](const Hess&) {}), std::invalid_argument);
  CHECK_THROWS_AS(for_each_hess(15, [](const Hess&) {}), std::invalid_argument);
}
