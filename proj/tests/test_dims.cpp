#include "doctest.h"
#include "wminus/dims.hpp"

using namespace wminus;

TEST_CASE("hand-counted multiset cells") {
  CHECK(multiset_generator_count(0, 0) == 1);
  CHECK(multiset_generator_count(0, 1) == 0);
  CHECK(multiset_generator_count(1, 1) == 1);
  CHECK(multiset_generator_count(2, 1) == 0);
  CHECK(multiset_generator_count(2, 2) == 1);
  CHECK(multiset_generator_count(3, 1) == 1);
  CHECK(multiset_generator_count(3, 2) == 1);
  CHECK(multiset_generator_count(4, 2) == 1);
  CHECK(multiset_generator_count(5, 3) == 2);
  // Regressions for the parity clamp: an even remainder below the running
  // bound must not admit even parts.
  CHECK(multiset_generator_count(5, 2) == 1);  // only {(5,2)}
  CHECK(multiset_generator_count(6, 2) == 2);  // {(5,1),(1,1)} and {(3,1),(3,1)}
  CHECK(multiset_generator_count(7, 2) == 1);  // two odd parts cannot sum to 7
}

TEST_CASE("series coefficients match the multiset count on a grid") {
  DimTable t = series_coefficients(8, 6, +1);
  for (int64_t r = 0; r <= 8; ++r)
    for (int64_t k = 0; k <= 6; ++k) CHECK(t[{r, k}] == multiset_generator_count(r, k));
}

TEST_CASE("negative side mirrors the positive side") {
  DimTable pos = series_coefficients(5, 4, +1);
  DimTable neg = series_coefficients(5, 4, -1);
  for (int64_t r = 0; r <= 5; ++r)
    for (int64_t k = 0; k <= 4; ++k) CHECK(neg[{-r, k}] == pos[{r, k}]);
}

TEST_CASE("odd-part and distinct-part partition counts agree") {
  for (int64_t n = 0; n <= 25; ++n) CHECK(odd_partition_count(n) == distinct_partition_count(n));
  CHECK(odd_partition_count(10) == 10);
  CHECK(odd_partition_count(0) == 1);
}

TEST_CASE("table rendering includes headers and cells") {
  DimTable t = series_coefficients(2, 2, +1);
  std::string s = render_table(t, 2, 2);
  CHECK(s.find("r\\k") != std::string::npos);
  CHECK(s.find('1') != std::string::npos);
}
