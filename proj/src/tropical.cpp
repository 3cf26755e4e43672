#include "tropseg/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tropseg {

namespace {

void require_same_dim(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

}  // namespace

TorusPoint TorusPoint::canonical() const {
  if (coords_.empty()) return *this;
  double lo = *std::min_element(coords_.begin(), coords_.end());
  std::vector<double> out(coords_);
  for (double& x : out) x -= lo;
  return TorusPoint(std::move(out));
}

bool TorusPoint::equals(const TorusPoint& other, double tol) const {
  return dim() == other.dim() && trop_dist(*this, other) <= tol;
}

double trop_dist(const TorusPoint& u, const TorusPoint& v) {
  require_same_dim(u, v);
  if (u.dim() == 0) return 0.0;
  double hi = u[0] - v[0];
  double lo = hi;
  for (std::size_t i = 1; i < u.dim(); ++i) {
    double d = u[i] - v[i];
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  return hi - lo;
}

TorusPoint trop_combine(std::span<const double> coeffs, std::span<const TorusPoint> points) {
  if (points.empty()) throw std::invalid_argument("trop_combine needs at least one point");
  if (coeffs.size() != points.size()) throw std::invalid_argument("coefficient and point counts differ");
  std::vector<double> out(points[0].dim());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = coeffs[0] + points[0][j];
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_same_dim(points[0], points[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], coeffs[i] + points[i][j]);
  }
  return TorusPoint(std::move(out));
}

TropicalSegment tropical_segment(const TorusPoint& u, const TorusPoint& v, double tol) {
  require_same_dim(u, v);
  if (u.dim() == 0) throw std::invalid_argument("tropical_segment needs non-empty points");
  const std::size_t e = u.dim();
  std::vector<double> diff(e);
  for (std::size_t j = 0; j < e; ++j) diff[j] = v[j] - u[j];

  TropicalSegment seg;
  seg.u_ = u;
  seg.v_ = v;
  seg.order_.resize(e);
  std::iota(seg.order_.begin(), seg.order_.end(), std::size_t{0});
  std::sort(seg.order_.begin(), seg.order_.end(), [&](std::size_t a, std::size_t b) {
    return diff[a] < diff[b] || (diff[a] == diff[b] && a < b);
  });
  seg.lambdas_.resize(e);
  for (std::size_t k = 0; k < e; ++k) seg.lambdas_[k] = diff[seg.order_[k]];

  seg.bend_starts_.push_back(0);
  for (std::size_t k = 1; k < e; ++k)
    if (seg.lambdas_[k] - seg.lambdas_[seg.bend_starts_.back()] > tol) seg.bend_starts_.push_back(k);
  return seg;
}

TorusPoint TropicalSegment::point_at(double lambda) const {
  const double shift = std::max(lambda, 0.0);
  std::vector<double> out(u_.dim());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(lambda + u_[j], v_[j]) - shift;
  return TorusPoint(std::move(out));
}

TorusPoint TropicalSegment::bend(std::size_t i) const {
  if (i >= bend_count()) throw std::out_of_range("bend index out of range");
  if (i == 0) return v_;
  if (i + 1 == bend_count()) return u_;
  return point_at(bend_lambda(i));
}

std::vector<TorusPoint> TropicalSegment::bends() const {
  std::vector<TorusPoint> out;
  out.reserve(bend_count());
  for (std::size_t i = 0; i < bend_count(); ++i) out.push_back(bend(i));
  return out;
}

double TropicalSegment::length() const { return lambdas_.empty() ? 0.0 : lambdas_.back() - lambdas_.front(); }

bool PointType::all_nonempty() const {
  return std::all_of(sets.begin(), sets.end(), [](const auto& s) { return !s.empty(); });
}

PointType point_type(std::span<const TorusPoint> generators, const TorusPoint& x, double tol) {
  if (generators.empty()) throw std::invalid_argument("point_type needs at least one generator");
  PointType type;
  type.sets.resize(x.dim());
  std::vector<double> shifted(x.dim());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    require_same_dim(generators[i], x);
    for (std::size_t j = 0; j < x.dim(); ++j) shifted[j] = generators[i][j] - x[j];
    double best = *std::max_element(shifted.begin(), shifted.end());
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (best - shifted[j] <= tol) type.sets[j].push_back(i);
  }
  return type;
}

bool in_tropical_hull(std::span<const TorusPoint> generators, const TorusPoint& x, double tol) {
  return point_type(generators, x, tol).all_nonempty();
}

}  // namespace tropseg
