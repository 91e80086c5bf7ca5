#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "freeboole/errors.hpp"

namespace freeboole {

/// A subset of a finite ground set [0, ground_size), stored as a bit vector.
/// Elements of a set algebra, generators, atoms and homomorphism images are
/// all values of this type.  Two elements combine only when their ground
/// sizes match.
class Element {
public:
  Element() = default;
  explicit Element(int ground_size);

  static Element full(int ground_size);
  static Element singleton(int ground_size, int point);
  static Element of(int ground_size, std::initializer_list<int> points);
  static Element from_points(int ground_size, const std::vector<int>& points);
  static Element from_mask(int ground_size, std::uint64_t mask);

  int ground_size() const { return n_; }
  bool test(int point) const;
  void set(int point);
  void reset(int point);
  int count() const;
  bool empty() const;
  bool is_full() const;

  Element operator&(const Element& o) const;  // meet
  Element operator|(const Element& o) const;  // join
  Element operator~() const;                  // complement within the ground
  Element minus(const Element& o) const;

  bool subset_of(const Element& o) const;
  bool intersects(const Element& o) const;

  bool operator==(const Element& o) const = default;
  // Orders subsets of the same ground by bit pattern, point 0 least
  // significant; used wherever a deterministic listing is required.
  std::strong_ordering operator<=>(const Element& o) const;

  std::vector<int> points() const;  // ascending
  std::uint64_t low_mask() const;   // first 64 points, for small grounds
  std::string to_string() const;    // "{0,2,5}"

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;

  void check_point(int point) const;
  void check_same_ground(const Element& o) const;
};

}  // namespace freeboole
