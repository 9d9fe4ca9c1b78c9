#pragma once

#include <utility>
#include <vector>

#include "gobs/rational.hpp"

namespace gobs {

// Finite union of closed intervals on the circle R/Z, with rational
// endpoints. Canonical form: intervals lie in [0, 1], are sorted, pairwise
// disjoint and non-touching; a set wrapping through 0 = 1 is stored split
// as [x, 1] and [0, y]. Two sets with equal point membership have equal
// representations, so == is set equality.
class CircleIntervalSet {
 public:
  struct Arc {
    Rational start;
    Rational length;
    Rational midpoint;  // reduced mod 1
  };

  CircleIntervalSet() = default;

  static CircleIntervalSet empty_set() { return {}; }
  static CircleIntervalSet full_circle();
  // Single closed interval [lo, hi] on the real line, lo <= hi, taken mod 1.
  // hi - lo >= 1 yields the full circle.
  static CircleIntervalSet interval(const Rational& lo, const Rational& hi);
  static CircleIntervalSet from_raw(std::vector<std::pair<Rational, Rational>> raw);

  const std::vector<std::pair<Rational, Rational>>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }
  bool is_full() const;
  bool contains(const Rational& t) const;
  Rational measure() const;
  bool subset_of(const CircleIntervalSet& o) const;

  // Largest connected arc of the set, joining a wrap-around pair into one
  // component. Ties break to the smallest start. pre: !empty().
  Arc largest_arc() const;

  friend bool operator==(const CircleIntervalSet& a, const CircleIntervalSet& b) {
    return a.iv_ == b.iv_;
  }
  friend bool operator!=(const CircleIntervalSet& a, const CircleIntervalSet& b) {
    return !(a == b);
  }

 private:
  std::vector<std::pair<Rational, Rational>> iv_;
};

CircleIntervalSet circle_intersect(const CircleIntervalSet& a, const CircleIntervalSet& b);
CircleIntervalSet circle_intersect(const std::vector<CircleIntervalSet>& sets);
CircleIntervalSet circle_shift(const CircleIntervalSet& s, const Rational& t);

}  // namespace gobs
