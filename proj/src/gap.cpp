#include "lacuna/gap.hpp"

#include <algorithm>
#include <numeric>

namespace lacuna {

namespace {

// Terms are weighted by a*alpha + b*beta; windows are gamma * s, so a lower
// valuation v = num/den becomes (den, num, den) and stays integral.
struct Frame {
    Integer a;
    Integer b;
    Integer s;
    std::string label;
};

Frame valuation_frame(const Rational& v) {
    return Frame{v.get_den(), v.get_num(), v.get_den(), "v=" + v.get_str()};
}

Frame vertical_frame() { return Frame{0, 1, 1, "vertical"}; }

void require_bivariate(const LacunaryPoly& f) {
    if (f.nvars() != 2) throw ArityMismatch("expected a bivariate polynomial");
    if (f.is_zero()) throw ZeroPolynomial("partition of the zero polynomial");
}

LacunaryPoly gather(const LacunaryPoly& f, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<Term> terms;
    terms.reserve(idx.size());
    for (auto j : idx) terms.push_back(f.terms()[j]);
    return LacunaryPoly::from_sorted_terms(f.nvars(), std::move(terms));
}

// Greedy blocking along sorted keys: a new block starts at position l when
// key(l) exceeds key(first of block) plus window(l - first).
template <class Window>
std::vector<LacunaryPoly> blocks(const LacunaryPoly& f, const std::vector<Integer>& key, Window window,
                                 const std::string& label, Trace* trace) {
    std::vector<std::size_t> order(f.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return key[i] < key[j]; });
    std::vector<LacunaryPoly> out;
    std::size_t jm = 0;
    for (std::size_t l = 1; l <= order.size(); ++l) {
        if (l < order.size()) {
            const Integer limit = key[order[jm]] + window(l - jm);
            if (key[order[l]] <= limit) continue;
            if (trace) {
                trace->push_back(label + ": split before position " + std::to_string(l) + ", weight " +
                                 key[order[l]].get_str() + " > " + limit.get_str());
            }
        }
        out.push_back(gather(f, std::vector<std::size_t>(order.begin() + jm, order.begin() + l)));
        jm = l;
    }
    return out;
}

std::vector<LacunaryPoly> partition_frame(const LacunaryPoly& f, const GapParams& p, const Frame& fr,
                                          Trace* trace) {
    std::vector<Integer> w;
    w.reserve(f.size());
    for (const auto& t : f.terms()) w.push_back(fr.a * t.exp[0] + fr.b * t.exp[1]);
    return blocks(f, w, [&](std::size_t n) -> Integer { return gamma(n, p) * fr.s; }, fr.label, trace);
}

std::vector<LacunaryPoly> bipartition_frames(const LacunaryPoly& f, const GapParams& p, const Frame& f1,
                                             const Frame& f2, Trace* trace) {
    std::vector<LacunaryPoly> current{f};
    for (;;) {
        const std::size_t before = current.size();
        for (const Frame* fr : {&f1, &f2}) {
            std::vector<LacunaryPoly> next;
            for (const auto& h : current) {
                for (auto& part : partition_frame(h, p, *fr, trace)) next.push_back(std::move(part));
            }
            current = std::move(next);
        }
        if (current.size() == before) return current;
    }
}

bool parallel(const Frame& x, const Frame& y) { return x.a * y.b == x.b * y.a; }

bool fits(const Direction& d, const GapParams& p) { return abs(d[0]) <= p.dx && abs(d[1]) <= p.dy; }

// Inward normals of the hull edges that a factor of bidegree p could share.
std::vector<Frame> edge_frames(const LacunaryPoly& f, const GapParams& p) {
    const Polygon2D hull = hull2d(f);
    Integer ymin = hull.vertices.front().y;
    for (const auto& v : hull.vertices) ymin = std::min(ymin, v.y);

    std::vector<Frame> lower, upper, vertical;
    for (const auto& e : hull.edges) {
        if (!fits(e.direction, p)) continue;
        const Integer& dp = e.direction[0];
        const Integer& dq = e.direction[1];
        if (e.lower) {
            Rational v(-dp, dq);
            v.canonicalize();
            Frame fr = valuation_frame(v);
            fr.label = "lower " + fr.label;
            lower.push_back(fr);
        }
        if (e.upper) {
            // lower valuation of the polynomial with X exponents reversed
            Rational v(dp, dq);
            v.canonicalize();
            upper.push_back(Frame{-v.get_den(), v.get_num(), v.get_den(), "upper v=" + v.get_str()});
        }
        if (e.vertical) {
            if (e.from.y == ymin) vertical.push_back(Frame{0, 1, 1, "vertical min"});
            else vertical.push_back(Frame{0, -1, 1, "vertical max"});
        }
    }
    std::vector<Frame> all;
    for (auto* group : {&lower, &upper, &vertical}) {
        for (auto& fr : *group) {
            const bool seen = std::any_of(all.begin(), all.end(), [&](const Frame& o) {
                return o.a == fr.a && o.b == fr.b && o.s == fr.s;
            });
            if (!seen) all.push_back(fr);
        }
    }
    return all;
}

}  // namespace

Integer gamma(std::size_t l, const GapParams& p) {
    if (l == 0) throw PreconditionError("gamma needs l >= 1");
    const Integer m = static_cast<unsigned long>(l - 1);
    return 4 * p.dx * p.dy * m * m;
}

Rational gamma_v(std::size_t l, const GapParams& p, const Rational& v) {
    if (l == 0) throw PreconditionError("gamma_v needs l >= 1");
    const Integer lz = static_cast<unsigned long>(l);
    const Rational m(lz - 1);
    Rational r = Rational(gamma(l, p)) - Rational(1, 2) * m * (Rational((3 * lz - 4) * p.dx) + v * Rational(lz));
    r.canonicalize();
    return r;
}

bool no_gap(const LacunaryPoly& f, const GapParams& p, const Rational& v) {
    require_bivariate(f);
    return partition_frame(f, p, valuation_frame(v), nullptr).size() == 1;
}

PartitionResult partition(const LacunaryPoly& f, const GapParams& p, const Rational& v, Trace* trace) {
    require_bivariate(f);
    const Frame fr = valuation_frame(v);
    return PartitionResult{partition_frame(f, p, fr, trace), "partition " + fr.label, {}};
}

PartitionResult bipartition(const LacunaryPoly& f, const GapParams& p, const Rational& v1,
                            const std::optional<Rational>& v2, Trace* trace) {
    require_bivariate(f);
    if (v2 && *v2 == v1) throw EqualValuations("bipartition needs two distinct valuations");
    const Frame f1 = valuation_frame(v1);
    const Frame f2 = v2 ? valuation_frame(*v2) : vertical_frame();
    return PartitionResult{bipartition_frames(f, p, f1, f2, trace), "bipartition " + f1.label + " x " + f2.label,
                           {}};
}

BoundsVal boundsval(const Direction& p1, const Direction& p2, const GapParams& params) {
    if (p1.size() != 2 || p2.size() != 2) throw ArityMismatch("boundsval takes planar directions");
    if (p1 == p2) throw ParallelDirections("boundsval needs non-parallel directions");
    if (p1[1] == 0 || p2[1] == 0) throw PreconditionError("boundsval needs directions with q != 0");
    BoundsVal out;
    out.v1 = Rational(-p1[0], p1[1]);
    out.v2 = Rational(-p2[0], p2[1]);
    out.v1.canonicalize();
    out.v2.canonicalize();
    const Rational gap = abs(out.v1 - out.v2);
    out.inverse_gap = 1 / gap;
    out.spread = (abs(out.v1) + abs(out.v2)) / gap;
    out.applicable = abs(p1[0]) <= params.dx && abs(p2[0]) <= params.dx &&
                     abs(p1[1]) + abs(p2[1]) <= params.dy;
    if (out.applicable) {
        out.holds = out.inverse_gap <= Rational(params.dy * params.dy, 4) && out.spread <= Rational(params.dx * params.dy);
    }
    return out;
}

std::vector<PartitionResult> reduce_bivariate(const LacunaryPoly& f, const GapParams& p, Trace* trace) {
    require_bivariate(f);
    if (f.is_monomial()) throw MonomialInput("reduce_bivariate of a monomial");
    const auto frames = edge_frames(f, p);
    std::vector<PartitionResult> out;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        for (std::size_t j = i + 1; j < frames.size(); ++j) {
            if (parallel(frames[i], frames[j])) continue;
            const std::string pass = frames[i].label + " x " + frames[j].label;
            if (trace) trace->push_back("pass " + pass);
            out.push_back(PartitionResult{bipartition_frames(f, p, frames[i], frames[j], trace), pass, {}});
        }
    }
    return out;
}

PartitionResult univariate_partition(const LacunaryPoly& f, const Integer& delta, std::size_t i,
                                     Trace* trace) {
    if (f.is_zero()) throw ZeroPolynomial("partition of the zero polynomial");
    if (i >= f.nvars()) throw BadIndex("variable index " + std::to_string(i + 1) + " out of range");
    if (sgn(delta) < 0) throw PreconditionError("negative window");
    std::vector<Integer> key;
    key.reserve(f.size());
    for (const auto& t : f.terms()) key.push_back(t.exp[i]);
    const std::string label = "x" + std::to_string(i + 1) + " window " + delta.get_str();
    return PartitionResult{blocks(f, key, [&](std::size_t) -> Integer { return delta; }, label, trace),
                           "univariate x" + std::to_string(i + 1), {}};
}

Integer multivariate_delta(std::size_t k, const ExponentVector& caps, std::size_t i) {
    Integer m = 0;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        if (j != i) m = std::max(m, caps[j]);
    }
    return gamma(k, GapParams{caps[i], m}) * caps[i] * m;
}

PartitionResult multivariate_partition(const LacunaryPoly& f, const ExponentVector& caps, Trace* trace) {
    if (f.is_zero()) throw ZeroPolynomial("partition of the zero polynomial");
    if (f.is_monomial()) throw MonomialInput("multivariate_partition of a monomial");
    if (caps.size() != f.nvars()) throw ArityMismatch("caps length differs from variable count");
    if (f.nvars() < 2) throw UnsupportedArity("multivariate_partition needs at least two variables");
    for (const auto& c : caps) {
        if (c < 1) throw PreconditionError("degree caps must be positive");
    }
    std::vector<LacunaryPoly> current{f};
    for (;;) {
        const std::size_t before = current.size();
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            std::vector<LacunaryPoly> next;
            for (const auto& h : current) {
                const Integer delta = multivariate_delta(h.size(), caps, i);
                for (auto& part : univariate_partition(h, delta, i, trace).summands) next.push_back(std::move(part));
            }
            current = std::move(next);
        }
        if (current.size() == before) break;
    }
    PartitionResult out;
    out.pass = "multivariate";
    for (const auto& h : current) {
        auto [g, shift] = normalize_mval(h);
        out.summands.push_back(std::move(g));
        out.shifts.push_back(std::move(shift));
    }
    return out;
}

}  // namespace lacuna
