#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reskit/error.hpp"
#include "reskit/parallel.hpp"

namespace reskit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double px, double py);  // rejects NaN/Inf
};

double dist(Point2 a, Point2 b);

enum class DomainKind { UnitDisk, Rectangle };

// Bounded planar domain with an arc-proportional boundary parametrization
// gamma : [0,1) -> boundary, injective and closed.
class Domain {
public:
  static Domain unit_disk();
  static Domain rectangle(double ax, double ay, double bx, double by);

  DomainKind kind() const { return kind_; }
  Point2 boundary(double t) const;           // gamma(t), t wrapped into [0,1)
  bool contains(Point2 p) const;             // open interior
  double boundary_distance(Point2 p) const;  // distance from p to the boundary
  Point2 centroid() const;
  double circumradius() const;  // max distance centroid -> boundary

  // axis-aligned bounding box
  double ax() const { return ax_; }
  double ay() const { return ay_; }
  double bx() const { return bx_; }
  double by() const { return by_; }

  double perimeter() const;
  std::string describe() const;

private:
  Domain(DomainKind kind, double ax, double ay, double bx, double by);

  DomainKind kind_;
  double ax_, ay_, bx_, by_;
};

enum class PointTag { Interior, Boundary, Fictitious };

enum class NodeFamily {
  Equidistant,
  ChebyshevMapped,
  Grid,
  FictitiousCircle,
  Segment,
  Custom,
};

const char* to_string(PointTag tag);
const char* to_string(NodeFamily family);

// Ordered set of distinct points (pairwise distance > 1e-12) with a tag
// recording which role its points play relative to a domain.
struct PointSet {
  std::vector<Point2> points;
  PointTag tag = PointTag::Interior;
  NodeFamily family = NodeFamily::Custom;

  PointSet() = default;
  PointSet(std::vector<Point2> pts, PointTag t, NodeFamily f);

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Point2& operator[](std::size_t i) const { return points[i]; }
};

// Verifies that every point satisfies its tag: Interior = strictly inside
// (more than 1e-12 from the boundary), Boundary = on the boundary to 1e-12,
// Fictitious = strictly outside the closure.
void check_tag(const PointSet& ps, const Domain& dom);

std::vector<double> equidistant_nodes(std::size_t n);
std::vector<double> chebyshev_nodes(std::size_t n);

PointSet boundary_points(const Domain& dom, std::size_t n,
                         NodeFamily family = NodeFamily::Equidistant);
PointSet interior_points(const Domain& dom, std::size_t target);
PointSet fictitious_boundary(const Domain& dom, double factor, std::size_t n);

// 1D nodes embedded on the segment y = 0.
PointSet segment_points(const std::vector<double>& xs,
                        NodeFamily family = NodeFamily::Segment);

// max over `reference` of the distance to the nearest point of `points`
double fill_distance(const PointSet& points, const PointSet& reference,
                     Exec mode = Exec::Parallel);

}  // namespace reskit
