#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sbolab {

/// Basis label for Lambda^j(R^m): a strictly increasing tuple of axis
/// labels in {1,...,m}, stored as a bitmask (bit a-1 <-> axis a).
class MultiIndex {
 public:
  MultiIndex() = default;
  static MultiIndex from_bits(std::uint32_t bits) { return MultiIndex(bits); }
  static MultiIndex from_axes(std::initializer_list<int> axes);
  static MultiIndex from_axes(const std::vector<int>& axes);

  std::uint32_t bits() const { return bits_; }
  int degree() const { return __builtin_popcount(bits_); }
  bool contains(int axis) const { return (bits_ >> (axis - 1)) & 1u; }
  MultiIndex with(int axis) const {
    return MultiIndex(bits_ | (1u << (axis - 1)));
  }
  MultiIndex without(int axis) const {
    return MultiIndex(bits_ & ~(1u << (axis - 1)));
  }
  std::vector<int> axes() const;

  friend bool operator==(MultiIndex a, MultiIndex b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(MultiIndex a, MultiIndex b) {
    return a.bits_ != b.bits_;
  }
  friend bool operator<(MultiIndex a, MultiIndex b) {
    return a.bits_ < b.bits_;
  }

  /// "dx_{1,3}"; degree 0 prints as "1".
  std::string str() const;

 private:
  explicit MultiIndex(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// Sign of dx_A ^ dx_B = sign * dx_{A u B}; 0 when A and B overlap.
int wedge_sign(MultiIndex a, MultiIndex b);

/// Sign of iota_axis dx_I = sign * dx_{I \ axis}; 0 when axis not in I.
int interior_sign(int axis, MultiIndex I);

MultiIndex complement(MultiIndex I, int m);

/// Sign s in *dx_I = s * dx_{I^c} for the Euclidean metric and the
/// orientation dx_1 ^ ... ^ dx_m.
int hodge_sign(MultiIndex I, int m);

/// All degree-d multi-indices on {1,...,m}, ascending by bitmask.
std::vector<MultiIndex> all_multi_indices(int m, int degree);

}  // namespace sbolab
