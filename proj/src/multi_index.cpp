#include "sbolab/multi_index.hpp"

#include <stdexcept>

namespace sbolab {

MultiIndex MultiIndex::from_axes(std::initializer_list<int> axes) {
  return from_axes(std::vector<int>(axes));
}

MultiIndex MultiIndex::from_axes(const std::vector<int>& axes) {
  std::uint32_t bits = 0;
  int prev = 0;
  for (int a : axes) {
    if (a < 1 || a > 32) throw std::invalid_argument("MultiIndex: axis range");
    if (a <= prev)
      throw std::invalid_argument("MultiIndex: axes must strictly increase");
    bits |= 1u << (a - 1);
    prev = a;
  }
  return MultiIndex(bits);
}

std::vector<int> MultiIndex::axes() const {
  std::vector<int> out;
  for (int a = 1; a <= 32; ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

std::string MultiIndex::str() const {
  if (bits_ == 0) return "1";
  std::string s = "dx_{";
  bool first = true;
  for (int a : axes()) {
    if (!first) s += ",";
    s += std::to_string(a);
    first = false;
  }
  s += "}";
  return s;
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  if (a.bits() & b.bits()) return 0;
  // Count pairs (p in a, q in b) with p > q.
  int inversions = 0;
  std::uint32_t bbits = b.bits();
  while (bbits) {
    int q = __builtin_ctz(bbits);
    inversions += __builtin_popcount(a.bits() >> (q + 1));
    bbits &= bbits - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

int interior_sign(int axis, MultiIndex I) {
  if (!I.contains(axis)) return 0;
  int below = __builtin_popcount(I.bits() & ((1u << (axis - 1)) - 1));
  return (below & 1) ? -1 : 1;
}

MultiIndex complement(MultiIndex I, int m) {
  std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  return MultiIndex::from_bits(full & ~I.bits());
}

int hodge_sign(MultiIndex I, int m) {
  return wedge_sign(I, complement(I, m));
}

std::vector<MultiIndex> all_multi_indices(int m, int degree) {
  std::vector<MultiIndex> out;
  if (degree < 0 || degree > m) return out;
  std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  for (std::uint32_t bits = 0; bits <= full; ++bits) {
    if (__builtin_popcount(bits) == degree)
      out.push_back(MultiIndex::from_bits(bits));
  }
  return out;
}

}  // namespace sbolab
