#include "reskit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace reskit {

namespace {

constexpr double kTagTol = 1e-12;
constexpr double kDupTol = 1e-12;

const char* kind_names[] = {"unit_disk", "rectangle"};

}  // namespace

Point2::Point2(double px, double py) : x(px), y(py) {
  if (!std::isfinite(px) || !std::isfinite(py))
    fail(ErrorKind::InvalidArgument, "point coordinates must be finite");
}

double dist(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

Domain::Domain(DomainKind kind, double ax, double ay, double bx, double by)
    : kind_(kind), ax_(ax), ay_(ay), bx_(bx), by_(by) {}

Domain Domain::unit_disk() {
  return Domain(DomainKind::UnitDisk, -1.0, -1.0, 1.0, 1.0);
}

Domain Domain::rectangle(double ax, double ay, double bx, double by) {
  if (!(std::isfinite(ax) && std::isfinite(ay) && std::isfinite(bx) &&
        std::isfinite(by)))
    fail(ErrorKind::InvalidArgument, "rectangle bounds must be finite");
  if (!(ax < bx && ay < by))
    fail(ErrorKind::InvalidArgument, "rectangle requires ax < bx and ay < by");
  return Domain(DomainKind::Rectangle, ax, ay, bx, by);
}

Point2 Domain::boundary(double t) const {
  t -= std::floor(t);  // wrap into [0,1)
  if (kind_ == DomainKind::UnitDisk) {
    const double a = 2.0 * std::numbers::pi * t;
    return Point2(std::cos(a), std::sin(a));
  }
  const double w = bx_ - ax_;
  const double h = by_ - ay_;
  double s = t * perimeter();  // arc length from (ax, ay), counterclockwise
  if (s < w) return Point2(ax_ + s, ay_);
  s -= w;
  if (s < h) return Point2(bx_, ay_ + s);
  s -= h;
  if (s < w) return Point2(bx_ - s, by_);
  s -= w;
  return Point2(ax_, by_ - s);
}

bool Domain::contains(Point2 p) const {
  if (kind_ == DomainKind::UnitDisk) return p.x * p.x + p.y * p.y < 1.0;
  return p.x > ax_ && p.x < bx_ && p.y > ay_ && p.y < by_;
}

double Domain::boundary_distance(Point2 p) const {
  if (kind_ == DomainKind::UnitDisk)
    return std::abs(1.0 - std::sqrt(p.x * p.x + p.y * p.y));
  if (contains(p))
    return std::min(std::min(p.x - ax_, bx_ - p.x),
                    std::min(p.y - ay_, by_ - p.y));
  const double dx = std::max({ax_ - p.x, 0.0, p.x - bx_});
  const double dy = std::max({ay_ - p.y, 0.0, p.y - by_});
  return std::sqrt(dx * dx + dy * dy);
}

Point2 Domain::centroid() const {
  if (kind_ == DomainKind::UnitDisk) return Point2(0.0, 0.0);
  return Point2(0.5 * (ax_ + bx_), 0.5 * (ay_ + by_));
}

double Domain::circumradius() const {
  if (kind_ == DomainKind::UnitDisk) return 1.0;
  const double hx = 0.5 * (bx_ - ax_);
  const double hy = 0.5 * (by_ - ay_);
  return std::sqrt(hx * hx + hy * hy);
}

double Domain::perimeter() const {
  if (kind_ == DomainKind::UnitDisk) return 2.0 * std::numbers::pi;
  return 2.0 * ((bx_ - ax_) + (by_ - ay_));
}

std::string Domain::describe() const {
  if (kind_ == DomainKind::UnitDisk) return "unit_disk";
  std::ostringstream os;
  os << "rectangle[" << ax_ << "," << ay_ << "," << bx_ << "," << by_ << "]";
  return os.str();
}

const char* to_string(PointTag tag) {
  switch (tag) {
    case PointTag::Interior: return "interior";
    case PointTag::Boundary: return "boundary";
    case PointTag::Fictitious: return "fictitious";
  }
  return "?";
}

const char* to_string(NodeFamily family) {
  switch (family) {
    case NodeFamily::Equidistant: return "equidistant";
    case NodeFamily::ChebyshevMapped: return "chebyshev";
    case NodeFamily::Grid: return "grid";
    case NodeFamily::FictitiousCircle: return "fictitious_circle";
    case NodeFamily::Segment: return "segment";
    case NodeFamily::Custom: return "custom";
  }
  return "?";
}

PointSet::PointSet(std::vector<Point2> pts, PointTag t, NodeFamily f)
    : points(std::move(pts)), tag(t), family(f) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y))
      fail(ErrorKind::InvalidArgument, "non-finite point in set");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(points[i], points[j]) <= kDupTol)
        fail(ErrorKind::InvalidArgument, "duplicate points in set");
}

void check_tag(const PointSet& ps, const Domain& dom) {
  for (const Point2& p : ps.points) {
    const double bd = dom.boundary_distance(p);
    bool ok = false;
    switch (ps.tag) {
      case PointTag::Interior: ok = dom.contains(p) && bd > kTagTol; break;
      case PointTag::Boundary: ok = bd <= kTagTol; break;
      case PointTag::Fictitious: ok = !dom.contains(p) && bd > kTagTol; break;
    }
    if (!ok)
      fail(ErrorKind::InvalidArgument,
           std::string("point violates tag '") + to_string(ps.tag) + "'");
  }
}

std::vector<double> equidistant_nodes(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "node count must be positive");
  if (n == 1) return {0.0};
  std::vector<double> xs(n);
  for (std::size_t k = 0; k < n; ++k)
    xs[k] = -1.0 + 2.0 * (static_cast<double>(k) / static_cast<double>(n - 1));
  return xs;
}

std::vector<double> chebyshev_nodes(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "node count must be positive");
  std::vector<double> xs(n);
  const double nn = static_cast<double>(n);
  // sin form keeps the set exactly symmetric about 0
  for (std::size_t k = 0; k < n; ++k)
    xs[k] = std::sin(std::numbers::pi * (2.0 * static_cast<double>(k) + 1.0 - nn) / (2.0 * nn));
  return xs;
}

PointSet boundary_points(const Domain& dom, std::size_t n, NodeFamily family) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "boundary point count must be positive");
  if (family != NodeFamily::Equidistant && family != NodeFamily::ChebyshevMapped)
    fail(ErrorKind::InvalidArgument, "boundary family must be equidistant or chebyshev");
  std::vector<Point2> pts;
  pts.reserve(n);
  if (family == NodeFamily::Equidistant) {
    for (std::size_t k = 0; k < n; ++k)
      pts.push_back(dom.boundary(static_cast<double>(k) / static_cast<double>(n)));
  } else {
    for (double x : chebyshev_nodes(n)) pts.push_back(dom.boundary(0.5 * (x + 1.0)));
  }
  PointSet ps(std::move(pts), PointTag::Boundary, family);
  check_tag(ps, dom);
  return ps;
}

PointSet interior_points(const Domain& dom, std::size_t target) {
  if (target == 0) fail(ErrorKind::InvalidArgument, "interior target must be positive");
  const double w = dom.bx() - dom.ax();
  const double h = dom.by() - dom.ay();
  std::size_t g = 1;
  while (g * g < target) ++g;
  for (; g <= 4096; ++g) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < g; ++i) {
      const double x = dom.ax() + (static_cast<double>(i) + 0.5) * w / static_cast<double>(g);
      for (std::size_t j = 0; j < g; ++j) {
        const double y = dom.ay() + (static_cast<double>(j) + 0.5) * h / static_cast<double>(g);
        const Point2 p(x, y);
        if (dom.contains(p) && dom.boundary_distance(p) > kTagTol) pts.push_back(p);
      }
    }
    if (pts.size() >= target) {
      PointSet ps(std::move(pts), PointTag::Interior, NodeFamily::Grid);
      check_tag(ps, dom);
      return ps;
    }
  }
  fail(ErrorKind::GenerationFailure, "could not reach interior point target");
}

PointSet fictitious_boundary(const Domain& dom, double factor, std::size_t n) {
  if (!(factor > 1.0))
    fail(ErrorKind::InvalidArgument, "fictitious boundary factor must exceed 1");
  if (n == 0) fail(ErrorKind::InvalidArgument, "charge count must be positive");
  const Point2 c = dom.centroid();
  const double r = factor * dom.circumradius();
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    pts.push_back(Point2(c.x + r * std::cos(a), c.y + r * std::sin(a)));
  }
  PointSet ps(std::move(pts), PointTag::Fictitious, NodeFamily::FictitiousCircle);
  check_tag(ps, dom);
  return ps;
}

PointSet segment_points(const std::vector<double>& xs, NodeFamily family) {
  std::vector<Point2> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back(Point2(x, 0.0));
  return PointSet(std::move(pts), PointTag::Interior, family);
}

double fill_distance(const PointSet& points, const PointSet& reference, Exec mode) {
  if (points.empty() || reference.empty())
    fail(ErrorKind::InvalidArgument, "fill_distance requires nonempty point sets");
  return par_max(
      reference.size(),
      [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point2& q : points.points) {
          const double d = dist(reference[i], q);
          if (d < best) best = d;
        }
        return best;
      },
      mode);
}

}  // namespace reskit
