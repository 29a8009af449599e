#pragma once

// Planar primitives for the two model geometries: the euclidean plane and the
// upper half-plane.  Geodesic arcs, transversal arc intersection with
// degeneracy reporting, tangents, crossing signs, turning numbers, and the
// classical base-point formula for the Whitney index of a planar polyline.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace curvewind {

constexpr double kDefaultEps = 1e-9;
constexpr double kSinMin = 1e-6;        // transversality floor for |sin(angle)|
constexpr double kThetaMin = 1e-3;      // regularity: turning angles stay below pi - kThetaMin
constexpr double kPi = 3.14159265358979323846;

inline double margin_for(double eps) { return 1e3 * eps; }

enum class Kernel { euclid, hyperbolic };

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double dot(double ax, double ay, double bx, double by) { return ax * bx + ay * by; }
inline double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }
inline double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Unit tangent vector in model coordinates.
struct Direction {
  double dx = 1.0;
  double dy = 0.0;

  static Direction of(double vx, double vy) {
    double n = std::hypot(vx, vy);
    if (!(n > 0.0) || !std::isfinite(n)) fail(Errc::internal, "cannot normalize zero direction");
    return Direction{vx / n, vy / n};
  }
  Direction rot90() const { return Direction{-dy, dx}; }
  Direction flipped() const { return Direction{-dx, -dy}; }
};

inline double cross(const Direction& a, const Direction& b) { return cross(a.dx, a.dy, b.dx, b.dy); }
inline double dot(const Direction& a, const Direction& b) { return dot(a.dx, a.dy, b.dx, b.dy); }

// Geodesic arc between two points of one kernel.  Euclid: straight segment.
// Hyperbolic: piece of a vertical ray or of a semicircle centered on the real
// axis, parametrized linearly in y resp. in the circle angle.
struct Arc {
  Kernel kernel = Kernel::euclid;
  Point a;
  Point b;
};

// Canonical supporting geodesic of a hyperbolic arc.
struct HypSupport {
  bool vertical = false;
  double x = 0.0;       // vertical: line x = const
  double c = 0.0;       // circle center (c, 0)
  double r = 0.0;       // circle radius
  double ta = 0.0;      // parameter of endpoint a (y if vertical, angle if circle)
  double tb = 0.0;      // parameter of endpoint b
};

inline HypSupport hyp_support(const Arc& arc, double eps) {
  HypSupport s;
  const Point& a = arc.a;
  const Point& b = arc.b;
  if (std::abs(a.x - b.x) <= eps * (1.0 + std::abs(a.x) + std::abs(b.x))) {
    s.vertical = true;
    s.x = 0.5 * (a.x + b.x);
    s.ta = a.y;
    s.tb = b.y;
    return s;
  }
  s.vertical = false;
  s.c = (a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y) / (2.0 * (a.x - b.x));
  s.r = std::hypot(a.x - s.c, a.y);
  s.ta = std::atan2(a.y, a.x - s.c);
  s.tb = std::atan2(b.y, b.x - s.c);
  return s;
}

inline Point point_at(const Arc& arc, double u, double eps = kDefaultEps) {
  if (arc.kernel == Kernel::euclid)
    return Point{arc.a.x + u * (arc.b.x - arc.a.x), arc.a.y + u * (arc.b.y - arc.a.y)};
  HypSupport s = hyp_support(arc, eps);
  if (s.vertical) return Point{s.x, s.ta + u * (s.tb - s.ta)};
  double th = s.ta + u * (s.tb - s.ta);
  return Point{s.c + s.r * std::cos(th), s.r * std::sin(th)};
}

inline Direction tangent_at(const Arc& arc, double u, double eps = kDefaultEps) {
  if (arc.kernel == Kernel::euclid) {
    (void)u;
    return Direction::of(arc.b.x - arc.a.x, arc.b.y - arc.a.y);
  }
  HypSupport s = hyp_support(arc, eps);
  if (s.vertical) return s.tb >= s.ta ? Direction{0.0, 1.0} : Direction{0.0, -1.0};
  double th = s.ta + u * (s.tb - s.ta);
  double sgn = s.tb >= s.ta ? 1.0 : -1.0;
  return Direction::of(-std::sin(th) * sgn, std::cos(th) * sgn);
}

inline double arc_param_length(const Arc& arc, double eps = kDefaultEps) {
  // Euclidean model length of the arc; used only for margin bookkeeping.
  if (arc.kernel == Kernel::euclid) return dist(arc.a, arc.b);
  HypSupport s = hyp_support(arc, eps);
  if (s.vertical) return std::abs(s.tb - s.ta);
  return s.r * std::abs(s.tb - s.ta);
}

// Sign of a transversal crossing: +1 exactly when the later branch crosses the
// earlier branch from its left to its right.  Calibrated so that a small
// positively oriented kink in the euclidean kernel contributes +1.
inline int crossing_sign(const Direction& v_early, const Direction& v_late, double eps = kDefaultEps) {
  double det = cross(v_late, v_early);
  if (std::abs(det) < eps) fail(Errc::parallel, "crossing_sign of (near-)parallel directions");
  return det > 0.0 ? +1 : -1;
}

struct ArcHit {
  Point p;
  double u = 0.0;        // parameter on the first arc, in (0,1)
  double v = 0.0;        // parameter on the second arc, in (0,1)
  double sin_angle = 0;  // signed sine of the crossing angle (tangent1 -> tangent2)
};

enum class ArcDegeneracyKind { tangency, endpoint_touch };

struct ArcDegeneracy {
  ArcDegeneracyKind kind;
  Point at;
};

struct ArcIntersection {
  std::vector<ArcHit> hits;
  std::vector<ArcDegeneracy> degeneracies;
};

namespace detail {

inline bool interval_overlap(double a0, double a1, double b0, double b1, double eps, double* lo, double* hi) {
  if (a0 > a1) std::swap(a0, a1);
  if (b0 > b1) std::swap(b0, b1);
  *lo = std::max(a0, b0);
  *hi = std::min(a1, b1);
  return *hi - *lo > eps;
}

// Common filter: candidate point with parameters on both arcs.  Returns true
// and appends to `out` when the point is a transversal interior crossing.
inline void emit_candidate(const Arc& a1, const Arc& a2, const Point& p, double u, double v,
                           double eps, double sin_min, ArcIntersection* out) {
  if (u < -0.5 || u > 1.5 || v < -0.5 || v > 1.5) return;
  bool on1 = u > 0.0 && u < 1.0;
  bool on2 = v > 0.0 && v < 1.0;
  double end_d = std::min(std::min(dist(p, a1.a), dist(p, a1.b)), std::min(dist(p, a2.a), dist(p, a2.b)));
  bool near1 = on1 || end_d <= eps;
  bool near2 = on2 || end_d <= eps;
  if (!near1 || !near2) return;
  if (end_d <= eps) {
    out->degeneracies.push_back({ArcDegeneracyKind::endpoint_touch, p});
    return;
  }
  Direction t1 = tangent_at(a1, u, eps);
  Direction t2 = tangent_at(a2, v, eps);
  double s = cross(t1, t2);
  if (std::abs(s) < sin_min) {
    out->degeneracies.push_back({ArcDegeneracyKind::tangency, p});
    return;
  }
  out->hits.push_back({p, u, v, s});
}

}  // namespace detail

// All transversal interior intersection points of two arcs of one kernel.
// Endpoint touches and tangencies (within eps resp. below sin_min) are
// reported as degeneracy flags, never as intersections.
inline ArcIntersection arc_intersection(const Arc& a1, const Arc& a2, double eps = kDefaultEps,
                                        double sin_min = kSinMin) {
  if (a1.kernel != a2.kernel) fail(Errc::mixed_kernels, "arc_intersection across kernels");
  if (!(eps > 0.0)) fail(Errc::internal, "arc_intersection needs eps > 0");
  ArcIntersection out;

  if (a1.kernel == Kernel::euclid) {
    double rx = a1.b.x - a1.a.x, ry = a1.b.y - a1.a.y;
    double sx = a2.b.x - a2.a.x, sy = a2.b.y - a2.a.y;
    double rlen = std::hypot(rx, ry), slen = std::hypot(sx, sy);
    double denom = cross(rx, ry, sx, sy);
    double qpx = a2.a.x - a1.a.x, qpy = a2.a.y - a1.a.y;
    if (std::abs(denom) <= eps * rlen * slen) {
      // Parallel supports: only collinear overlap is a degeneracy.
      if (std::abs(cross(qpx, qpy, rx, ry)) <= eps * rlen * std::max(1.0, std::hypot(qpx, qpy))) {
        double t0 = dot(qpx, qpy, rx, ry) / (rlen * rlen);
        double t1 = t0 + dot(sx, sy, rx, ry) / (rlen * rlen);
        double lo, hi;
        if (detail::interval_overlap(0.0, 1.0, t0, t1, eps / rlen, &lo, &hi)) {
          double mid = 0.5 * (lo + hi);
          out.degeneracies.push_back(
              {ArcDegeneracyKind::tangency, Point{a1.a.x + mid * rx, a1.a.y + mid * ry}});
        } else if (hi - lo > -eps / rlen) {
          double mid = 0.5 * (lo + hi);
          out.degeneracies.push_back(
              {ArcDegeneracyKind::endpoint_touch, Point{a1.a.x + mid * rx, a1.a.y + mid * ry}});
        }
      }
      return out;
    }
    double u = cross(qpx, qpy, sx, sy) / denom;
    double v = cross(qpx, qpy, rx, ry) / denom;
    Point p{a1.a.x + u * rx, a1.a.y + u * ry};
    detail::emit_candidate(a1, a2, p, u, v, eps, sin_min, &out);
    return out;
  }

  // Hyperbolic kernel: intersect the supporting geodesics, then filter by arc
  // ranges.  Parameters are linear in y (vertical) or in the angle (circle).
  HypSupport s1 = hyp_support(a1, eps);
  HypSupport s2 = hyp_support(a2, eps);
  auto param1 = [&](const Point& p) {
    return s1.vertical ? (p.y - s1.ta) / (s1.tb - s1.ta)
                       : (std::atan2(p.y, p.x - s1.c) - s1.ta) / (s1.tb - s1.ta);
  };
  auto param2 = [&](const Point& p) {
    return s2.vertical ? (p.y - s2.ta) / (s2.tb - s2.ta)
                       : (std::atan2(p.y, p.x - s2.c) - s2.ta) / (s2.tb - s2.ta);
  };

  if (s1.vertical && s2.vertical) {
    if (std::abs(s1.x - s2.x) <= eps) {
      double lo, hi;
      if (detail::interval_overlap(s1.ta, s1.tb, s2.ta, s2.tb, eps, &lo, &hi))
        out.degeneracies.push_back({ArcDegeneracyKind::tangency, Point{s1.x, 0.5 * (lo + hi)}});
    }
    return out;
  }
  if (s1.vertical != s2.vertical) {
    const HypSupport& v = s1.vertical ? s1 : s2;
    const HypSupport& c = s1.vertical ? s2 : s1;
    double dx = v.x - c.c;
    double y2 = c.r * c.r - dx * dx;
    if (y2 <= eps * c.r * c.r) {
      if (std::abs(y2) <= eps * c.r * c.r)
        out.degeneracies.push_back({ArcDegeneracyKind::tangency, Point{v.x, std::sqrt(std::max(0.0, y2))}});
      return out;
    }
    Point p{v.x, std::sqrt(y2)};
    detail::emit_candidate(a1, a2, p, param1(p), param2(p), eps, sin_min, &out);
    return out;
  }
  // Two circles centered on the real axis.
  if (std::abs(s1.c - s2.c) <= eps) {
    if (std::abs(s1.r - s2.r) <= eps) {
      double lo, hi;
      if (detail::interval_overlap(s1.ta, s1.tb, s2.ta, s2.tb, eps, &lo, &hi))
        out.degeneracies.push_back(
            {ArcDegeneracyKind::tangency,
             Point{s1.c + s1.r * std::cos(0.5 * (lo + hi)), s1.r * std::sin(0.5 * (lo + hi))}});
    }
    return out;
  }
  double x = (s1.r * s1.r - s2.r * s2.r + s2.c * s2.c - s1.c * s1.c) / (2.0 * (s2.c - s1.c));
  double y2 = s1.r * s1.r - (x - s1.c) * (x - s1.c);
  double scale = std::max(s1.r, s2.r);
  if (y2 <= eps * scale * scale) {
    if (std::abs(y2) <= eps * scale * scale)
      out.degeneracies.push_back({ArcDegeneracyKind::tangency, Point{x, std::sqrt(std::max(0.0, y2))}});
    return out;
  }
  Point p{x, std::sqrt(y2)};
  detail::emit_candidate(a1, a2, p, param1(p), param2(p), eps, sin_min, &out);
  return out;
}

// Signed exterior angle sum of a cyclic direction list, divided by 2*pi.
// Exact integer for a closed direction cycle.
inline long long turning_degree(const std::vector<Direction>& dirs, double eps = kDefaultEps) {
  if (dirs.size() < 2) fail(Errc::not_a_cycle, "turning_degree needs at least two directions");
  double total = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Direction& d0 = dirs[i];
    const Direction& d1 = dirs[(i + 1) % dirs.size()];
    double c = cross(d0, d1);
    double d = dot(d0, d1);
    if (d < 0.0 && std::abs(c) < eps) fail(Errc::cusp_turn, "antiparallel consecutive directions");
    total += std::atan2(c, d);
  }
  double k = total / (2.0 * kPi);
  long long rounded = std::llround(k);
  if (std::abs(k - static_cast<double>(rounded)) > 1e-6)
    fail(Errc::not_a_cycle, "direction list does not close up to an integer turn");
  return rounded;
}

// Classical Whitney formula for a closed generic planar polyline: sum of
// double-point signs plus a base-point term.  The base point is the
// lexicographically smallest (y, then x) vertex; the curve stays above it, so
// mu is +1 iff the curve passes it turning counterclockwise.
inline long long whitney_base_sum(const std::vector<Point>& poly, double eps = kDefaultEps) {
  std::size_t n = poly.size();
  if (n < 3) fail(Errc::non_generic, "polyline needs at least three vertices");
  double mrg = margin_for(eps);

  std::size_t base = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (poly[i].y < poly[base].y - 1e-15 ||
        (std::abs(poly[i].y - poly[base].y) <= 1e-15 && poly[i].x < poly[base].x))
      base = i;
  }

  auto vtx = [&](std::size_t i) -> const Point& { return poly[(base + i) % n]; };
  std::vector<Direction> dirs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vtx(i);
    const Point& b = vtx(i + 1);
    if (dist(a, b) <= eps) fail(Errc::non_generic, "repeated vertex");
    dirs[i] = Direction::of(b.x - a.x, b.y - a.y);
  }

  double mu_cross = cross(dirs[n - 1], dirs[0]);
  if (std::abs(mu_cross) < eps) fail(Errc::non_generic, "flat angle at the base vertex");
  long long total = mu_cross > 0.0 ? +1 : -1;

  std::vector<Point> hits;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      Arc ai{Kernel::euclid, vtx(i), vtx(i + 1)};
      Arc aj{Kernel::euclid, vtx(j), vtx(j + 1)};
      ArcIntersection r = arc_intersection(ai, aj, eps, kSinMin);
      for (const ArcDegeneracy& d : r.degeneracies) {
        if (d.kind == ArcDegeneracyKind::tangency) fail(Errc::non_generic, "tangency between edges");
        if (!adjacent) fail(Errc::non_generic, "edge through a vertex");
      }
      for (const ArcHit& h : r.hits) {
        double de = std::min({dist(h.p, ai.a), dist(h.p, ai.b), dist(h.p, aj.a), dist(h.p, aj.b)});
        if (de < mrg) fail(Errc::non_generic, "double point too close to a vertex");
        for (const Point& q : hits)
          if (dist(q, h.p) < mrg) fail(Errc::non_generic, "triple point or crowded double points");
        hits.push_back(h.p);
        total += crossing_sign(dirs[i], dirs[j], eps);
      }
    }
  }
  return total;
}

}  // namespace curvewind
