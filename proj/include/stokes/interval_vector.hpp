#pragma once

#include <array>
#include <vector>

#include "stokes/interval.hpp"

namespace stokes {

// fixed-dimension vector of intervals
class IntervalVector {
  public:
    IntervalVector() = default;
    explicit IntervalVector(std::size_t dim) : c_(dim) {}
    IntervalVector(std::initializer_list<Interval> init) : c_(init) {}

    std::size_t dimension() const { return c_.size(); }
    Interval& operator[](std::size_t i) { return c_[i]; }
    const Interval& operator[](std::size_t i) const { return c_[i]; }

    auto begin() { return c_.begin(); }
    auto end() { return c_.end(); }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

  private:
    std::vector<Interval> c_;
};

// state of the six-dimensional real-time system (x1, y1, x2, y2, s1, s2)
struct StateBox {
    Interval x1, y1, x2, y2, s1, s2;

    std::array<Interval, 6> components() const { return {x1, y1, x2, y2, s1, s2}; }
    static StateBox from(const std::array<Interval, 6>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }

    // lower bound of s1^2 + s2^2 over the box
    double s_norm2_lower() const {
        return rnd::add_down(rnd::mul_down(s1.mig(), s1.mig()),
                             rnd::mul_down(s2.mig(), s2.mig()));
    }

    bool contains(const StateBox& o) const {
        return x1.contains(o.x1) && y1.contains(o.y1) && x2.contains(o.x2) &&
               y2.contains(o.y2) && s1.contains(o.s1) && s2.contains(o.s2);
    }
};

inline StateBox hull(const StateBox& a, const StateBox& b) {
    return {hull(a.x1, b.x1), hull(a.y1, b.y1), hull(a.x2, b.x2),
            hull(a.y2, b.y2), hull(a.s1, b.s1), hull(a.s2, b.s2)};
}

}  // namespace stokes
