#include <doctest.h>

#include "realizer/bits.hpp"

using namespace realizer;

TEST_CASE("color sets print 1-based and order by size then elements") {
  CHECK(to_string(ColorSet::of({0, 2})) == "{1,3}");
  CHECK(subset_order_less(ColorSet::of({2}), ColorSet::of({0, 1})));
  CHECK(subset_order_less(ColorSet::of({0, 2}), ColorSet::of({1, 2})));
  CHECK_FALSE(subset_order_less(ColorSet::of({1, 2}), ColorSet::of({0, 2})));
  CHECK(ColorSet::full(2).bits == 0b111u);
}

TEST_CASE("eta is the parity homomorphism") {
  CHECK(eta(GroupElem{}) == 1);
  CHECK(eta(GroupElem::generator(1)) == -1);
  CHECK(eta(GroupElem::generator(1) * GroupElem::generator(2)) == 1);
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) CHECK(eta(GroupElem{a} * GroupElem{b}) == eta(GroupElem{a}) * eta(GroupElem{b}));
}

TEST_CASE("sort_sign counts inversions mod 2") {
  CHECK(sort_sign({1, 2, 3}) == 1);
  CHECK(sort_sign({2, 1, 3}) == -1);
  CHECK(sort_sign({3, 1, 2}) == 1);
  CHECK(sort_sign({4, 3, 2, 1}) == 1);
  CHECK(sort_sign({5, 9}) == 1);
}
