#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "u4kit/tensor_product.hpp"

using namespace u4;

TEST_CASE("square of the fundamental") {
  Decomposition d = decompose(Irrep{{1, 0, 0, 0}}, Irrep{{1, 0, 0, 0}});
  REQUIRE(d.size() == 2);
  CHECK(d.at(Irrep{{2, 0, 0, 0}}) == 1);
  CHECK(d.at(Irrep{{1, 1, 0, 0}}) == 1);
}

TEST_CASE("dimension conservation") {
  std::vector<std::pair<Irrep, Irrep>> products = {
      {Irrep{{1, 0, 0, 0}}, Irrep{{1, 0, 0, 0}}},
      {Irrep{{2, 1, 1, 0}}, Irrep{{1, 1, 0, 0}}},
      {Irrep{{2, 2, 0, 0}}, Irrep{{2, 1, 0, 0}}},
      {Irrep{{8, 4, 2, 0}}, Irrep{{1, 1, 0, 0}}},
      {Irrep{{3, 2, 1, 0}}, Irrep{{3, 1, 1, 0}}},
  };
  for (const auto& [f, fp] : products) {
    long long total = 0;
    for (const auto& [fpp, eta] : decompose(f, fp)) {
      CHECK(eta >= 1);
      total += eta * dimension(fpp);
    }
    CHECK(total == dimension(f) * dimension(fp));
  }
}

TEST_CASE("decomposition is symmetric in its factors") {
  Irrep f{{3, 2, 1, 0}}, fp{{2, 1, 1, 0}};
  CHECK(decompose(f, fp) == decompose(fp, f));
}

TEST_CASE("couplings with a fundamental factor are multiplicity free") {
  for (const auto& [fpp, eta] : decompose(Irrep{{8, 4, 2, 0}}, Irrep{{1, 0, 0, 0}}))
    CHECK(eta == 1);
  Decomposition d = decompose(Irrep{{8, 4, 2, 0}}, Irrep{{1, 1, 0, 0}});
  for (const auto& [fpp, eta] : d) CHECK(eta == 1);
  // every vertical two-box addition to [8,4,2,0]
  CHECK(d.size() == 6);
  CHECK(d.count(Irrep{{9, 5, 2, 0}}) == 1);
  CHECK(d.count(Irrep{{9, 4, 3, 0}}) == 1);
  CHECK(d.count(Irrep{{9, 4, 2, 1}}) == 1);
  CHECK(d.count(Irrep{{8, 5, 3, 0}}) == 1);
  CHECK(d.count(Irrep{{8, 5, 2, 1}}) == 1);
  CHECK(d.count(Irrep{{8, 4, 3, 1}}) == 1);
}

TEST_CASE("outer multiplicity matches the decomposition map") {
  Irrep f{{2, 1, 1, 0}}, fp{{2, 1, 0, 0}};
  Decomposition d = decompose(f, fp);
  for (const auto& [fpp, eta] : d) CHECK(outer_multiplicity(f, fp, fpp) == eta);
  CHECK(outer_multiplicity(f, fp, Irrep{{9, 0, 0, 0}}) == 0);
}

TEST_CASE("a nontrivial outer multiplicity appears") {
  // [2,1,1,0] x [2,1,1,0] contains [3,2,2,1] twice
  CHECK(outer_multiplicity(Irrep{{2, 1, 1, 0}}, Irrep{{2, 1, 1, 0}},
                           Irrep{{3, 2, 2, 1}}) == 2);
  CHECK(outer_multiplicity(Irrep{{2, 1, 1, 0}}, Irrep{{2, 1, 1, 0}},
                           Irrep{{3, 3, 1, 1}}) == 1);
}
