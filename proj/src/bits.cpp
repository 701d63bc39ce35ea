#include "realizer/bits.hpp"

#include <algorithm>
#include <sstream>

namespace realizer {

ColorSet ColorSet::of(std::initializer_list<int> colors) {
  ColorSet s;
  for (int c : colors) s.bits |= 1u << c;
  return s;
}

std::vector<int> ColorSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool subset_order_less(ColorSet a, ColorSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string to_string(ColorSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int c : s.elements()) {
    if (!first) os << ',';
    os << c + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

int sort_sign(const std::vector<int>& seq) {
  // Parity via cycle decomposition of the ranking permutation.
  const std::size_t m = seq.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<bool> seen(m, false);
  int sign = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace realizer
