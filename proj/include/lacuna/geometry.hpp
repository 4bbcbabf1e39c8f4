#pragma once

// Directions, Newton polygons and the screening sets of candidate directions
// for unidimensional factors.

#include <cstddef>
#include <vector>

#include "lacuna/core.hpp"

namespace lacuna {

// Integer vector with first nonzero coordinate positive and coprime coordinates.
class Direction {
public:
    // Throws ZeroVector when every coordinate is zero.
    static Direction normalize(std::vector<Integer> v);

    const std::vector<Integer>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const Direction& o) const { return coords_ == o.coords_; }
    bool operator!=(const Direction& o) const { return !(*this == o); }
    // Lexicographic, for ordered containers.
    bool operator<(const Direction& o) const;

private:
    explicit Direction(std::vector<Integer> c) : coords_(std::move(c)) {}
    std::vector<Integer> coords_;
};

Direction normalize_direction(const std::vector<Integer>& v);
std::string to_string(const Direction& d);

enum class DeltaKind { One, Two, Three };

struct DirectionSet {
    DeltaKind kind = DeltaKind::Three;
    std::vector<Direction> members;  // sorted, distinct

    bool contains(const Direction& d) const;
    std::size_t size() const noexcept { return members.size(); }
};

DirectionSet delta3(const LacunaryPoly& f);
// Pairwise-plane strategy: candidates screened against every 2D coordinate
// projection, then checked for the no-singleton line partition.
DirectionSet delta1(const LacunaryPoly& f);
// Reference strategy: every member of delta3 checked for the no-singleton
// line partition. Slower; kept as a cross-check.
DirectionSet delta1_from_delta3(const LacunaryPoly& f);
DirectionSet delta2_bivariate(const LacunaryPoly& f);

// Groups point indices by the line of direction d through them. Groups are
// listed in order of their first member; members keep input order.
std::vector<std::vector<std::size_t>> line_partition(const std::vector<ExponentVector>& points,
                                                     const Direction& d);

// True when line_partition(points, d) has no singleton group.
bool partitions_without_singletons(const std::vector<ExponentVector>& points, const Direction& d);

// Planar exponent point: x is the exponent of X (first chosen variable), y of Y.
struct Point2 {
    Integer x;
    Integer y;
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

enum class HullPart { Lower, Upper, Vertical };

struct HullEdge {
    Point2 from;
    Point2 to;
    Direction direction;
    // A non-vertical segment hull has a single edge that is both lower and upper.
    bool lower = false;
    bool upper = false;
    bool vertical = false;

    bool in(HullPart part) const;
};

// Convex hull of a bivariate support, vertices counter-clockwise in (x, y).
// Edge classes follow the inward-normal rule in the plane that puts the Y
// exponent on the first axis and the X exponent on the second.
struct Polygon2D {
    std::vector<Point2> vertices;
    std::vector<HullEdge> edges;

    std::vector<HullEdge> edges_of(HullPart part) const;
};

Polygon2D hull2d(const std::vector<Point2>& points);
// Support of f projected on variables (var_x, var_y).
Polygon2D hull2d(const LacunaryPoly& f, std::size_t var_x = 0, std::size_t var_y = 1);

// Exact valuation v = -p/q attached to an edge direction (p, q), q != 0.
struct Valuation {
    Rational value;
    Direction source;
};

// One valuation per edge of the requested part whose direction has q != 0.
// Distinct edges with equal direction yield one entry.
std::vector<Valuation> edge_valuations(const LacunaryPoly& f, HullPart part);
std::vector<Valuation> edge_valuations(const Polygon2D& hull, HullPart part);

}  // namespace lacuna
