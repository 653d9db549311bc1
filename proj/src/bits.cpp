#include "acs/bits.hpp"

namespace acs {

std::vector<int> elements(Mask s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s) {
    Mask low = s & (~s + 1);
    out.push_back(min_element(low));
    s ^= low;
  }
  return out;
}

std::string set_to_string(Mask s) {
  if (s == 0) return "-";
  std::string out;
  for (int e : elements(s)) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(e);
  }
  return out;
}

}  // namespace acs
