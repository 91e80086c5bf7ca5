#include "freeboole/element.hpp"

#include <bit>

namespace freeboole {

namespace {
constexpr int kWordBits = 64;

int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

Element::Element(int ground_size) : n_(ground_size), w_(word_count(ground_size), 0) {
  if (ground_size < 0) throw DimensionError("ground size must be nonnegative");
}

Element Element::full(int ground_size) {
  Element e(ground_size);
  for (auto& w : e.w_) w = ~std::uint64_t{0};
  if (ground_size % kWordBits != 0 && !e.w_.empty())
    e.w_.back() &= (std::uint64_t{1} << (ground_size % kWordBits)) - 1;
  return e;
}

Element Element::singleton(int ground_size, int point) {
  Element e(ground_size);
  e.set(point);
  return e;
}

Element Element::of(int ground_size, std::initializer_list<int> points) {
  Element e(ground_size);
  for (int p : points) e.set(p);
  return e;
}

Element Element::from_points(int ground_size, const std::vector<int>& points) {
  Element e(ground_size);
  for (int p : points) e.set(p);
  return e;
}

Element Element::from_mask(int ground_size, std::uint64_t mask) {
  Element e(ground_size);
  while (mask) {
    int p = std::countr_zero(mask);
    e.set(p);
    mask &= mask - 1;
  }
  return e;
}

void Element::check_point(int point) const {
  if (point < 0 || point >= n_)
    throw DimensionError("point " + std::to_string(point) + " outside ground of size " +
                         std::to_string(n_));
}

void Element::check_same_ground(const Element& o) const {
  if (n_ != o.n_)
    throw DimensionError("ground sizes differ: " + std::to_string(n_) + " vs " +
                         std::to_string(o.n_));
}

bool Element::test(int point) const {
  check_point(point);
  return (w_[point / kWordBits] >> (point % kWordBits)) & 1;
}

void Element::set(int point) {
  check_point(point);
  w_[point / kWordBits] |= std::uint64_t{1} << (point % kWordBits);
}

void Element::reset(int point) {
  check_point(point);
  w_[point / kWordBits] &= ~(std::uint64_t{1} << (point % kWordBits));
}

int Element::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool Element::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool Element::is_full() const { return count() == n_; }

Element Element::operator&(const Element& o) const {
  check_same_ground(o);
  Element r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

Element Element::operator|(const Element& o) const {
  check_same_ground(o);
  Element r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

Element Element::operator~() const {
  Element r = full(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~w_[i];
  return r;
}

Element Element::minus(const Element& o) const {
  check_same_ground(o);
  Element r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
  return r;
}

bool Element::subset_of(const Element& o) const {
  check_same_ground(o);
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool Element::intersects(const Element& o) const {
  check_same_ground(o);
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

std::strong_ordering Element::operator<=>(const Element& o) const {
  if (n_ != o.n_) return n_ <=> o.n_;
  for (std::size_t i = w_.size(); i-- > 0;) {
    if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
  }
  return std::strong_ordering::equal;
}

std::vector<int> Element::points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      out.push_back(static_cast<int>(i) * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t Element::low_mask() const { return w_.empty() ? 0 : w_[0]; }

std::string Element::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int p : points()) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

}  // namespace freeboole
