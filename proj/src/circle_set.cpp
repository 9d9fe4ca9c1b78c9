#include "gobs/circle_set.hpp"

#include <algorithm>

#include "gobs/errors.hpp"

namespace gobs {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

CircleIntervalSet CircleIntervalSet::full_circle() {
  CircleIntervalSet s;
  s.iv_.emplace_back(kZero, kOne);
  return s;
}

bool CircleIntervalSet::is_full() const {
  return iv_.size() == 1 && iv_[0].first == kZero && iv_[0].second == kOne;
}

CircleIntervalSet CircleIntervalSet::interval(const Rational& lo, const Rational& hi) {
  std::vector<std::pair<Rational, Rational>> raw;
  raw.emplace_back(lo, hi);
  return from_raw(std::move(raw));
}

CircleIntervalSet CircleIntervalSet::from_raw(std::vector<std::pair<Rational, Rational>> raw) {
  std::vector<std::pair<Rational, Rational>> parts;
  for (auto& [lo, hi] : raw) {
    if (hi < lo) throw precondition_error("interval with hi < lo");
    if (hi - lo >= kOne) return full_circle();
    Rational f(lo.floor());
    Rational a = lo - f;
    Rational b = hi - f;
    if (b <= kOne) {
      parts.emplace_back(std::move(a), std::move(b));
    } else {
      parts.emplace_back(std::move(a), kOne);
      parts.emplace_back(kZero, b - kOne);
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const std::pair<Rational, Rational>& x, const std::pair<Rational, Rational>& y) {
              if (x.first != y.first) return x.first < y.first;
              return x.second < y.second;
            });
  CircleIntervalSet out;
  for (auto& p : parts) {
    if (!out.iv_.empty() && p.first <= out.iv_.back().second) {
      if (p.second > out.iv_.back().second) out.iv_.back().second = std::move(p.second);
    } else {
      out.iv_.push_back(std::move(p));
    }
  }
  return out;
}

bool CircleIntervalSet::contains(const Rational& t) const {
  Rational x = mod1(t);
  for (const auto& [lo, hi] : iv_) {
    if (lo <= x && x <= hi) return true;
  }
  // 0 and 1 are the same circle point
  if (x.is_zero() && !iv_.empty() && iv_.back().second == kOne) return true;
  return false;
}

Rational CircleIntervalSet::measure() const {
  Rational m(0);
  for (const auto& [lo, hi] : iv_) m += hi - lo;
  return m;
}

bool CircleIntervalSet::subset_of(const CircleIntervalSet& o) const {
  return circle_intersect(*this, o) == *this;
}

CircleIntervalSet::Arc CircleIntervalSet::largest_arc() const {
  if (iv_.empty()) throw precondition_error("largest_arc of empty set");
  if (is_full()) return {kZero, kOne, Rational(1, 2)};

  struct Comp {
    Rational start;
    Rational length;
  };
  std::vector<Comp> comps;
  size_t lo_idx = 0, hi_idx = iv_.size();
  bool wraps = iv_.size() >= 2 && iv_.front().first == kZero && iv_.back().second == kOne;
  if (wraps) {
    const auto& tail = iv_.back();
    const auto& head = iv_.front();
    comps.push_back({tail.first, (kOne - tail.first) + head.second});
    lo_idx = 1;
    hi_idx = iv_.size() - 1;
  }
  for (size_t i = lo_idx; i < hi_idx; ++i) {
    comps.push_back({iv_[i].first, iv_[i].second - iv_[i].first});
  }
  const Comp* best = &comps[0];
  for (const auto& c : comps) {
    if (c.length > best->length || (c.length == best->length && c.start < best->start)) {
      best = &c;
    }
  }
  return {best->start, best->length, mod1(best->start + best->length / Rational(2))};
}

CircleIntervalSet circle_intersect(const CircleIntervalSet& a, const CircleIntervalSet& b) {
  std::vector<std::pair<Rational, Rational>> raw;
  const auto& A = a.intervals();
  const auto& B = b.intervals();
  size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    const Rational& lo = std::max(A[i].first, B[j].first);
    const Rational& hi = std::min(A[i].second, B[j].second);
    if (lo <= hi) raw.emplace_back(lo, hi);
    if (A[i].second < B[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  // the circle point 0 = 1 may be shared only via the wrap identification
  if (a.contains(kZero) && b.contains(kZero)) raw.emplace_back(kZero, kZero);
  return CircleIntervalSet::from_raw(std::move(raw));
}

CircleIntervalSet circle_intersect(const std::vector<CircleIntervalSet>& sets) {
  if (sets.empty()) return CircleIntervalSet::full_circle();
  CircleIntervalSet acc = sets[0];
  for (size_t i = 1; i < sets.size(); ++i) acc = circle_intersect(acc, sets[i]);
  return acc;
}

CircleIntervalSet circle_shift(const CircleIntervalSet& s, const Rational& t) {
  std::vector<std::pair<Rational, Rational>> raw;
  raw.reserve(s.intervals().size());
  for (const auto& [lo, hi] : s.intervals()) raw.emplace_back(lo + t, hi + t);
  return CircleIntervalSet::from_raw(std::move(raw));
}

}  // namespace gobs
