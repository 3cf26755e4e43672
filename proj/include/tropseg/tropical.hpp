#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropseg/tolerance.hpp"

namespace tropseg {

/// Point of R^e / R(1,...,1). Coordinates are stored as given; equality is modulo
/// the all-ones direction.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> coords) : coords_(std::move(coords)) {}
  TorusPoint(std::initializer_list<double> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  /// Representative with minimum coordinate 0.
  TorusPoint canonical() const;
  bool equals(const TorusPoint& other, double tol = kDefaultTol) const;

 private:
  std::vector<double> coords_;
};

/// max_i(u_i - v_i) - min_i(u_i - v_i). Throws std::invalid_argument on dimension mismatch.
double trop_dist(const TorusPoint& u, const TorusPoint& v);

/// Coordinate-wise max over i of coeffs[i] + points[i] (max-plus).
TorusPoint trop_combine(std::span<const double> coeffs, std::span<const TorusPoint> points);

/// Tropical line segment between u and v, stored implicitly.
///
/// The path is y(l) = max(l + u, v) for l between the smallest and the largest
/// entry of v - u. Each distinct value of v - u is a bend point; bend 0 is v and
/// the last bend is u. Bends are materialized on demand, so construction costs one
/// sort of the e differences.
class TropicalSegment {
 public:
  const TorusPoint& u() const { return u_; }
  const TorusPoint& v() const { return v_; }

  /// v - u sorted ascending, ties by coordinate index.
  std::span<const double> lambdas() const { return lambdas_; }
  /// Coordinate index of each entry of lambdas().
  std::span<const std::size_t> lambda_order() const { return order_; }

  std::size_t bend_count() const { return bend_starts_.size(); }
  /// Parameter value producing bend i.
  double bend_lambda(std::size_t i) const { return lambdas_[bend_starts_.at(i)]; }
  TorusPoint bend(std::size_t i) const;
  std::vector<TorusPoint> bends() const;

  /// y(l) shifted by -max(l, 0). With equal-height ultrametric endpoints every
  /// point keeps that height.
  TorusPoint point_at(double lambda) const;

  /// Tropical length of the path, equal to trop_dist(u, v).
  double length() const;

 private:
  friend TropicalSegment tropical_segment(const TorusPoint&, const TorusPoint&, double);

  TorusPoint u_;
  TorusPoint v_;
  std::vector<double> lambdas_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> bend_starts_;
};

/// O(e log e). Differences within tol of the previous kept value share a bend.
TropicalSegment tropical_segment(const TorusPoint& u, const TorusPoint& v, double tol = kDefaultTol);

/// Type of a point relative to generators: sets[j] holds the (0-based) generators i
/// for which coordinate j attains max_l(g_i[l] - x[l]).
struct PointType {
  std::vector<std::vector<std::size_t>> sets;

  bool all_nonempty() const;
};

PointType point_type(std::span<const TorusPoint> generators, const TorusPoint& x, double tol = kDefaultTol);

bool in_tropical_hull(std::span<const TorusPoint> generators, const TorusPoint& x, double tol = kDefaultTol);

}  // namespace tropseg
