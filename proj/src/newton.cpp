#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "knotpoly/apoly.hpp"

namespace knotpoly {
namespace {

// Sign of the cross product (b - a) x (c - a), computed exactly.
int cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  auto z = [](std::int64_t v) { return mpz_class(static_cast<long>(v)); };
  const mpz_class value = (z(b.first) - z(a.first)) * (z(c.second) - z(a.second)) -
                          (z(b.second) - z(a.second)) * (z(c.first) - z(a.first));
  return sgn(value);
}

Slope slope_between(const LatticePoint& a, const LatticePoint& b) {
  const std::int64_t dl = b.first - a.first;
  const std::int64_t dm = b.second - a.second;
  if (dl == 0) return {true, {}};
  mpq_class q(mpz_class(static_cast<long>(dm)), mpz_class(static_cast<long>(dl)));
  q.canonicalize();
  return {false, q};
}

}  // namespace

std::string Slope::str() const { return infinite ? "inf" : value.get_str(); }

NewtonPolygon newton_polygon(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
  std::vector<LatticePoint> pts;
  pts.reserve(p.size());
  for (const auto& t : p.terms()) pts.emplace_back(t.mono.l, t.mono.m);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  NewtonPolygon out;
  if (pts.size() == 1) {
    out.vertices = pts;
    return out;
  }

  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  out.vertices = hull;

  if (hull.size() == 2) {
    out.edge_slopes.push_back(slope_between(hull[0], hull[1]));
  } else {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      out.edge_slopes.push_back(slope_between(hull[i], hull[(i + 1) % hull.size()]));
    }
  }
  return out;
}

NewtonPolygon newton_polygon(const APolyResult& a) { return newton_polygon(a.poly); }

std::string newton_to_json(const NewtonPolygon& polygon) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& [l, m] : polygon.vertices) {
    doc["vertices"].push_back({l, m});
  }
  doc["slopes"] = nlohmann::ordered_json::array();
  for (const auto& s : polygon.edge_slopes) doc["slopes"].push_back(s.str());
  return doc.dump();
}

}  // namespace knotpoly
