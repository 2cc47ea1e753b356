#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcap/exactnum.hpp"

namespace symcap {

// Negative weight data (b; b_1, b_2, ...).  Entries may lie in a quadratic
// field so that limit domains of staircase families fit the same type.
struct WeightTuple {
  Surd b;
  std::vector<Surd> cuts;  // nonincreasing, positive

  // Sorts the cuts, drops zeros and checks the necessary conditions
  // sum b_j^2 < b^2, sum b_j <= 3b, b_1 + b_2 <= b.
  static WeightTuple make(const Surd& b, std::vector<Surd> cuts);
  static WeightTuple make(const Rational& b, const std::vector<Rational>& cuts);
  // "b : b1 b2 ..." or "b:b1,b2,..."
  static WeightTuple parse(std::string_view s);

  bool is_rational() const;
  Rational rb() const;
  std::vector<Rational> rcuts() const;
  WeightTuple scaled(const Surd& lambda) const;
  std::string str() const;
};

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct RationalPolygon {
  std::vector<Point> vertices;  // counterclockwise

  // Reorients clockwise input, drops repeated and collinear vertices, and
  // rejects nonconvex or degenerate input and points outside the quadrant.
  static RationalPolygon make(std::vector<Point> pts);
  // One vertex per line "x y", '#' starts a comment.
  static RationalPolygon parse(std::string_view text);

  Rational twice_area() const;
  RationalPolygon translated(const Rational& dx, const Rational& dy) const;
};

struct IntMat2 {
  long a, b, c, d;  // [[a, b], [c, d]]
};

// One cut of a concave region.  `map` and `shift` send the parent's
// coordinates to this region's standard position, where the cut is the
// triangle T(size) in the corner.
struct CutNode {
  Rational size;
  IntMat2 map{1, 0, 0, 1};
  Point shift;
  std::vector<CutNode> children;  // I1 (above the cut) first, then I2
  std::vector<int> labels;        // 1 or 2 for each child
};

struct CutTree {
  Rational b;
  // Roots of the regions Omega_0, Omega_1, Omega_2 (absent when empty).
  std::optional<CutNode> regions[3];

  std::vector<Rational> sizes() const;  // pre-order
  bool check_nesting() const;           // a_{I1} + a_{I2} <= a_I everywhere
};

struct CutResult {
  WeightTuple tuple;
  CutTree tree;
};

CutResult cut_decomposition(const RationalPolygon& poly);

// Cuts of a concave region below the convex decreasing chain from (0,h) to
// (w,0); nothing when the region is empty.
std::optional<CutNode> concave_cuts(const std::vector<Point>& chain);

struct DomainStats {
  Surd per, vol;
  std::optional<Surd> a0;
};

// Larger root of z^2 - (Per^2/Vol - 2) z + 1 when Per^2 >= 4 Vol.
std::optional<Surd> accumulation_point(const Surd& per, const Surd& vol);
DomainStats stats(const WeightTuple& t);

Rational affine_length(const Point& from, const Point& to);
Rational boundary_perimeter(const RationalPolygon& poly);
BigInt singularity_order(const RationalPolygon& poly, size_t vertex);
unsigned cut_length_lower_bound(const BigInt& order);

// V(z) = sqrt(z / Vol), kept symbolic.
struct VolumeConstraint {
  Surd z, vol;

  int compare(const Surd& x) const;  // sign of x - V(z)
  std::optional<Surd> exact() const;
  double approx() const;
};

VolumeConstraint volume_constraint(const Surd& vol, const Surd& z);
VolumeConstraint volume_constraint(const WeightTuple& t, const Surd& z);

}  // namespace symcap
