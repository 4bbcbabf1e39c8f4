#include "lacuna/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

namespace lacuna {

Direction Direction::normalize(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw ZeroVector("direction of the zero vector");
    const auto first = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
    if (sgn(*first) < 0) g = -g;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return Direction(std::move(v));
}

bool Direction::operator<(const Direction& o) const { return compare_lex(coords_, o.coords_) < 0; }

Direction normalize_direction(const std::vector<Integer>& v) { return Direction::normalize(v); }

std::string to_string(const Direction& d) { return to_string(d.coords()); }

bool DirectionSet::contains(const Direction& d) const {
    return std::binary_search(members.begin(), members.end(), d);
}

namespace {

void require_terms(const LacunaryPoly& f) {
    if (f.size() < 2) throw TooFewTerms("at least two terms are required");
}

std::vector<Integer> difference(const ExponentVector& a, const ExponentVector& b) {
    std::vector<Integer> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

DirectionSet make_set(DeltaKind kind, std::set<Direction> dirs) {
    return DirectionSet{kind, std::vector<Direction>(dirs.begin(), dirs.end())};
}

// Byte key of an integer vector, for hashing.
std::string key_of(const std::vector<Integer>& v) {
    std::string key;
    for (const auto& c : v) {
        key += c.get_str(32);
        key += ',';
    }
    return key;
}

// Directions d such that the (distinct) points split into d-lines with no
// singleton. Any such d joins points[0] to another point.
std::set<Direction> no_singleton_directions(const std::vector<ExponentVector>& points) {
    std::set<Direction> out;
    if (points.size() < 2) return out;
    std::set<Direction> candidates;
    for (std::size_t j = 1; j < points.size(); ++j) {
        candidates.insert(Direction::normalize(difference(points[j], points[0])));
    }
    for (const auto& d : candidates) {
        if (partitions_without_singletons(points, d)) out.insert(d);
    }
    return out;
}

}  // namespace

DirectionSet delta3(const LacunaryPoly& f) {
    require_terms(f);
    const auto& t = f.terms();
    std::set<Direction> dirs;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            dirs.insert(Direction::normalize(difference(t[i].exp, t[j].exp)));
        }
    }
    return make_set(DeltaKind::Three, std::move(dirs));
}

std::vector<std::vector<std::size_t>> line_partition(const std::vector<ExponentVector>& points,
                                                     const Direction& d) {
    const std::size_t n = d.size();
    Integer norm2 = 0;
    for (const auto& c : d.coords()) norm2 += c * c;
    std::unordered_map<std::string, std::size_t> group_of;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<Integer> key(n);
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto& a = points[p];
        if (a.size() != n) throw ArityMismatch("point and direction lengths differ");
        Integer dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += a[i] * d[i];
        // ||d||^2 a - (a.d) d: constant exactly along lines of direction d.
        for (std::size_t i = 0; i < n; ++i) key[i] = norm2 * a[i] - dot * d[i];
        auto [it, inserted] = group_of.emplace(key_of(key), groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(p);
    }
    return groups;
}

bool partitions_without_singletons(const std::vector<ExponentVector>& points, const Direction& d) {
    const auto groups = line_partition(points, d);
    return std::none_of(groups.begin(), groups.end(),
                        [](const std::vector<std::size_t>& g) { return g.size() == 1; });
}

DirectionSet delta1_from_delta3(const LacunaryPoly& f) {
    const DirectionSet all = delta3(f);
    const auto points = f.support();
    std::set<Direction> out;
    for (const auto& d : all.members) {
        if (partitions_without_singletons(points, d)) out.insert(d);
    }
    return make_set(DeltaKind::One, std::move(out));
}

DirectionSet delta1(const LacunaryPoly& f) {
    require_terms(f);
    const std::size_t n = f.nvars();
    const auto points = f.support();

    std::set<Direction> candidates;
    for (std::size_t j = 1; j < points.size(); ++j) {
        candidates.insert(Direction::normalize(difference(points[j], points[0])));
    }

    // Planar screening sets for every pair of variables.
    struct Plane {
        std::size_t i, j;
        std::set<Direction> dirs;
    };
    std::vector<Plane> planes;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::set<ExponentVector, DescendingLex> projected;
            for (const auto& a : points) projected.insert(ExponentVector{a[i], a[j]});
            std::vector<ExponentVector> pts(projected.begin(), projected.end());
            planes.push_back(Plane{i, j, no_singleton_directions(pts)});
        }
    }

    std::set<Direction> out;
    for (const auto& d : candidates) {
        bool ok = true;
        for (const auto& plane : planes) {
            if (d[plane.i] == 0 && d[plane.j] == 0) continue;
            const Direction dd = Direction::normalize({d[plane.i], d[plane.j]});
            if (plane.dirs.count(dd) == 0) {
                ok = false;
                break;
            }
        }
        if (ok && partitions_without_singletons(points, d)) out.insert(d);
    }
    return make_set(DeltaKind::One, std::move(out));
}

bool HullEdge::in(HullPart part) const {
    switch (part) {
        case HullPart::Lower: return lower;
        case HullPart::Upper: return upper;
        case HullPart::Vertical: return vertical;
    }
    return false;
}

std::vector<HullEdge> Polygon2D::edges_of(HullPart part) const {
    std::vector<HullEdge> out;
    for (const auto& e : edges) {
        if (e.in(part)) out.push_back(e);
    }
    return out;
}

namespace {

Integer cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

HullEdge make_edge(const Point2& from, const Point2& to) {
    HullEdge e{from, to, Direction::normalize({to.x - from.x, to.y - from.y})};
    // Counter-clockwise in (x, y): the interior is on the left, so the inward
    // normal is (-dy, dx); its X component decides the class.
    const int dy = sgn(Integer(to.y - from.y));
    e.lower = dy < 0;
    e.upper = dy > 0;
    e.vertical = dy == 0;
    return e;
}

}  // namespace

Polygon2D hull2d(const std::vector<Point2>& input) {
    std::vector<Point2> pts = input;
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        const int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polygon2D poly;
    if (pts.empty()) return poly;
    if (pts.size() == 1) {
        poly.vertices = pts;
        return poly;
    }

    // Andrew's monotone chain; collinear points are dropped.
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);

    if (hull.size() == 2) {
        poly.vertices = hull;
        HullEdge e = make_edge(hull[0], hull[1]);
        if (!e.vertical) e.lower = e.upper = true;
        poly.edges.push_back(std::move(e));
        return poly;
    }
    poly.vertices = hull;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        poly.edges.push_back(make_edge(hull[i], hull[(i + 1) % hull.size()]));
    }
    return poly;
}

Polygon2D hull2d(const LacunaryPoly& f, std::size_t var_x, std::size_t var_y) {
    if (var_x >= f.nvars() || var_y >= f.nvars() || var_x == var_y) {
        throw BadIndex("hull2d needs two distinct variables");
    }
    std::vector<Point2> pts;
    pts.reserve(f.size());
    for (const auto& t : f.terms()) pts.push_back(Point2{t.exp[var_x], t.exp[var_y]});
    return hull2d(pts);
}

DirectionSet delta2_bivariate(const LacunaryPoly& f) {
    if (f.nvars() != 2) throw UnsupportedArity("delta2 is implemented for bivariate polynomials only");
    require_terms(f);
    const Polygon2D poly = hull2d(f);
    std::set<Direction> seen, twice;
    if (poly.vertices.size() >= 3) {
        for (const auto& e : poly.edges) {
            if (!seen.insert(e.direction).second) twice.insert(e.direction);
        }
    }
    return make_set(DeltaKind::Two, std::move(twice));
}

std::vector<Valuation> edge_valuations(const Polygon2D& hull, HullPart part) {
    std::vector<Valuation> out;
    for (const auto& e : hull.edges_of(part)) {
        const Integer& p = e.direction[0];
        const Integer& q = e.direction[1];
        if (q == 0) continue;
        Rational v(-p, q);
        v.canonicalize();
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const Valuation& w) { return w.value == v; });
        if (!dup) out.push_back(Valuation{v, e.direction});
    }
    std::sort(out.begin(), out.end(),
              [](const Valuation& a, const Valuation& b) { return a.value < b.value; });
    return out;
}

std::vector<Valuation> edge_valuations(const LacunaryPoly& f, HullPart part) {
    if (f.nvars() != 2) throw UnsupportedArity("edge valuations need a bivariate polynomial");
    return edge_valuations(hull2d(f), part);
}

}  // namespace lacuna
