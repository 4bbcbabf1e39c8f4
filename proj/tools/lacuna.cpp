// lacuna: bounded-degree factors of lacunary polynomials from the command line.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lacuna/driver.hpp"

using namespace lacuna;
using ojson = nlohmann::ordered_json;

namespace {

struct Input {
    std::string file;
    std::string expr;
    std::size_t nvars = 0;
    bool json = false;

    void attach(CLI::App* app) {
        app->add_option("file", file, "Input file, or '-' for stdin");
        app->add_option("-e,--expr", expr, "Polynomial given inline");
        app->add_option("-n,--nvars", nvars, "Variable count (inferred by default)");
        app->add_flag("--json", json, "Machine-readable output");
    }

    std::string text() const {
        if (!expr.empty()) return expr;
        if (file.empty() || file == "-") {
            return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        }
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    LacunaryPoly poly(std::size_t at_least = 0) const {
        const std::string t = text();
        const std::size_t n = nvars ? nvars : std::max(at_least, infer_arity(t));
        return parse_poly(t, n);
    }
};

std::vector<Integer> parse_ints(const std::string& s) {
    std::vector<Integer> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        item.erase(std::remove(item.begin(), item.end(), '('), item.end());
        item.erase(std::remove(item.begin(), item.end(), ')'), item.end());
        if (item.empty()) throw std::invalid_argument("empty entry in integer list '" + s + "'");
        out.emplace_back(item, 10);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

Rational parse_rational(const std::string& s) {
    Rational r(s, 10);
    r.canonicalize();
    return r;
}

ojson vec_json(const std::vector<Integer>& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::string monomial_text(const ExponentVector& e) {
    return format_poly(LacunaryPoly::monomial(e.size(), 1, e));
}

void print_trace(const Trace& t) {
    for (const auto& line : t) std::cerr << "# " << line << "\n";
}

void print_summands(const PartitionResult& r, bool json) {
    if (json) {
        std::cout << to_json(r, -1) << "\n";
        return;
    }
    for (const auto& s : r.summands) std::cout << format_poly(s) << "\n";
}

DeltaKind delta_kind(int k) {
    switch (k) {
        case 1: return DeltaKind::One;
        case 2: return DeltaKind::Two;
        case 3: return DeltaKind::Three;
    }
    throw std::invalid_argument("--set takes 1, 2 or 3");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded-degree factors of lacunary polynomials over Q"};
    app.require_subcommand(1);

    // factors
    Input fin;
    std::string bounds;
    bool unidim_only = false, multidim_only = false, trace = false;
    std::uint64_t seed = 0;
    unsigned trials = 8;
    std::size_t guard = kDefaultDenseGuard;
    int screen = 1;
    auto* factors = app.add_subcommand("factors", "Irreducible factors of bounded degree");
    fin.attach(factors);
    factors->add_option("--bounds", bounds, "Degree caps d1,...,dn")->required();
    auto* uo = factors->add_flag("--unidim-only", unidim_only);
    factors->add_flag("--multidim-only", multidim_only)->excludes(uo);
    factors->add_option("--seed", seed);
    factors->add_option("--trials", trials);
    factors->add_option("--dense-guard", guard);
    factors->add_option("--screen", screen, "Direction screening set, 1 or 3");
    factors->add_flag("--trace", trace);

    // geometry
    Input din;
    int set = 1;
    auto* directions = app.add_subcommand("directions", "Candidate directions of unidimensional factors");
    din.attach(directions);
    directions->add_option("--set", set, "1, 2 or 3");

    Input hin;
    std::string part = "all";
    auto* hull = app.add_subcommand("hull", "Newton polygon edges of a bivariate polynomial");
    hin.attach(hull);
    hull->add_option("--part", part, "lower, upper, vertical or all");

    // unidim
    Input cin_;
    std::string dir;
    auto* comps = app.add_subcommand("components", "Components along a direction");
    cin_.attach(comps);
    comps->add_option("--direction", dir)->required();

    Input pin;
    auto* proj = app.add_subcommand("project", "Projection of a unidimensional polynomial");
    pin.attach(proj);
    proj->add_option("--direction", dir)->required();

    Input lin;
    auto* lift_cmd = app.add_subcommand("lift", "Lift a univariate polynomial along a direction");
    lin.attach(lift_cmd);
    lift_cmd->add_option("--direction", dir)->required();

    // gap
    Input ptin;
    std::string v, v1, v2;
    std::string dx = "1", dy = "1";
    bool vertical = false;
    auto* part_cmd = app.add_subcommand("partition", "Split at gaps relative to one valuation");
    ptin.attach(part_cmd);
    part_cmd->add_option("--v", v)->required();
    part_cmd->add_option("--dx", dx);
    part_cmd->add_option("--dy", dy);
    part_cmd->add_flag("--trace", trace);

    Input bpin;
    auto* bip = app.add_subcommand("bipartition", "Alternate two partitions to a fixpoint");
    bpin.attach(bip);
    bip->add_option("--v1", v1)->required();
    auto* v2opt = bip->add_option("--v2", v2);
    bip->add_flag("--vertical", vertical)->excludes(v2opt);
    bip->add_option("--dx", dx);
    bip->add_option("--dy", dy);
    bip->add_flag("--trace", trace);

    Input mpin;
    auto* mpart = app.add_subcommand("mpartition", "Multivariate partition by degree caps");
    mpin.attach(mpart);
    mpart->add_option("--bounds", bounds)->required();
    mpart->add_flag("--trace", trace);

    // dense
    Input dvin;
    std::string other;
    auto* divides = app.add_subcommand("divides", "Exact divisibility test (dense)");
    dvin.attach(divides);
    divides->add_option("--factor", other)->required();

    Input mtin;
    auto* mult = app.add_subcommand("mult", "Exact multiplicity of a factor (dense)");
    mtin.attach(mult);
    mult->add_option("--factor", other)->required();

    Input gin;
    auto* gcd = app.add_subcommand("gcd", "Dense gcd");
    gin.attach(gcd);
    gcd->add_option("--with", other)->required();

    Input fdin;
    std::string caps;
    auto* fdense = app.add_subcommand("factor-dense", "Dense factorization in one or two variables");
    fdin.attach(fdense);
    fdense->add_option("--caps", caps);

    Input vin;
    std::vector<std::string> claims;
    std::vector<unsigned> claim_mults;
    auto* verify = app.add_subcommand("verify", "Check claimed factors and multiplicities");
    vin.attach(verify);
    verify->add_option("--factor", claims)->required();
    verify->add_option("--mult", claim_mults, "Claimed multiplicities, in the order of --factor");
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);
    verify->add_option("--dense-guard", guard);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*factors) {
            const auto caps_v = parse_ints(bounds);
            const LacunaryPoly f = fin.poly(caps_v.size());
            Trace t;
            FactorOptions o;
            o.unidimensional = !multidim_only;
            o.multidimensional = !unidim_only;
            o.seed = seed;
            o.trials = trials;
            o.dense_guard = guard;
            o.screen = screen == 3 ? DeltaKind::Three : DeltaKind::One;
            o.trace = trace ? &t : nullptr;
            const FactorReport r = bounded_degree_factors(f, caps_v, o);
            print_trace(t);
            if (fin.json) {
                std::cout << to_json(r) << "\n";
            } else {
                std::cout << "monomial\t" << monomial_text(r.monomial) << "\n";
                for (const auto& u : r.unidimensional) std::cout << "unidimensional\t" << u.multiplicity << "\t" << format_poly(u.factor) << "\n";
                for (const auto& u : r.multidimensional) std::cout << "multidimensional\t" << u.multiplicity << "\t" << format_poly(u.factor) << "\n";
                for (const auto& d : r.residual) std::cout << "residual\t-\t" << format_poly(d.to_lacunary()) << "\n";
                for (const auto& d : r.unresolved) std::cout << "unresolved\t-\t" << to_string(d) << "\n";
                for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
            }
        } else if (*directions) {
            const LacunaryPoly f = din.poly();
            DirectionSet s;
            switch (delta_kind(set)) {
                case DeltaKind::One: s = delta1(f); break;
                case DeltaKind::Two: s = delta2_bivariate(f); break;
                case DeltaKind::Three: s = delta3(f); break;
            }
            if (din.json) {
                ojson a = ojson::array();
                for (const auto& d : s.members) a.push_back(vec_json(d.coords()));
                std::cout << a.dump() << "\n";
            } else {
                for (const auto& d : s.members) std::cout << to_string(d) << "\n";
            }
        } else if (*hull) {
            const LacunaryPoly f = hin.poly(2);
            const Polygon2D h = hull2d(f);
            ojson a = ojson::array();
            for (const auto& e : h.edges) {
                const bool keep = part == "all" || (part == "lower" && e.lower) || (part == "upper" && e.upper) ||
                                  (part == "vertical" && e.vertical);
                if (!keep) continue;
                std::string kinds;
                if (e.lower) kinds += "lower ";
                if (e.upper) kinds += "upper ";
                if (e.vertical) kinds += "vertical ";
                kinds.pop_back();
                if (hin.json) {
                    a.push_back({{"from", vec_json({e.from.x, e.from.y})},
                                 {"to", vec_json({e.to.x, e.to.y})},
                                 {"direction", vec_json(e.direction.coords())},
                                 {"part", kinds}});
                } else {
                    std::cout << "(" << e.from.x << "," << e.from.y << ") -> (" << e.to.x << "," << e.to.y << ")\t"
                              << to_string(e.direction) << "\t" << kinds << "\n";
                }
            }
            if (hin.json) std::cout << a.dump() << "\n";
        } else if (*comps) {
            const auto d = Direction::normalize(parse_ints(dir));
            const auto dec = components(cin_.poly(d.size()), d);
            ojson a = ojson::array();
            for (const auto& c : dec.components) {
                if (cin_.json) a.push_back(format_poly(c));
                else std::cout << format_poly(c) << "\n";
            }
            if (cin_.json) std::cout << a.dump() << "\n";
        } else if (*proj) {
            const auto d = Direction::normalize(parse_ints(dir));
            const Projection p = project(pin.poly(d.size()), d);
            if (pin.json) {
                std::cout << ojson{{"poly", format_poly(p.poly)}, {"anchor", vec_json(p.anchor)}}.dump() << "\n";
            } else {
                std::cout << format_poly(p.poly) << "\nanchor " << to_string(p.anchor) << "\n";
            }
        } else if (*lift_cmd) {
            const auto d = Direction::normalize(parse_ints(dir));
            lin.nvars = 1;
            const LacunaryPoly g = lift(lin.poly(), d);
            if (lin.json) std::cout << ojson(format_poly(g)).dump() << "\n";
            else std::cout << format_poly(g) << "\n";
        } else if (*part_cmd || *bip) {
            const GapParams p{Integer(dx, 10), Integer(dy, 10)};
            Input& in = *part_cmd ? ptin : bpin;
            const LacunaryPoly f = in.poly(2);
            Trace t;
            PartitionResult r;
            if (*part_cmd) {
                r = partition(f, p, parse_rational(v), trace ? &t : nullptr);
            } else {
                std::optional<Rational> second;
                if (!vertical) {
                    if (v2.empty()) throw std::invalid_argument("bipartition needs --v2 or --vertical");
                    second = parse_rational(v2);
                }
                r = bipartition(f, p, parse_rational(v1), second, trace ? &t : nullptr);
            }
            print_trace(t);
            print_summands(r, in.json);
        } else if (*mpart) {
            const auto caps_v = parse_ints(bounds);
            Trace t;
            const PartitionResult r = multivariate_partition(mpin.poly(caps_v.size()), caps_v, trace ? &t : nullptr);
            print_trace(t);
            print_summands(r, mpin.json);
        } else if (*divides || *mult) {
            Input& in = *divides ? dvin : mtin;
            const std::string ft = in.text();
            const std::size_t n = in.nvars ? in.nvars : std::max(infer_arity(ft), infer_arity(other));
            const LacunaryPoly f = parse_poly(ft, n);
            const LacunaryPoly g = parse_poly(other, n);
            if (g.is_zero() || g.is_constant()) throw PreconditionError("the factor must be non-constant");
            // a monomial part of the factor is handled apart from the dense part
            const auto verdict = verify_factors(f, {Claim{g, 1}}, 1, 0, kDefaultDenseGuard);
            if (verdict[0].mode != CertificateMode::Exact) throw GuardExceeded("input exceeds the dense guard");
            const unsigned m = verdict[0].found;
            if (*divides) {
                if (in.json) std::cout << ojson(m > 0).dump() << "\n";
                else std::cout << (m > 0 ? "true" : "false") << "\n";
            } else {
                std::cout << m << "\n";
            }
        } else if (*gcd) {
            const std::string ft = gin.text();
            const std::size_t n = gin.nvars ? gin.nvars : std::max(infer_arity(ft), infer_arity(other));
            const DensePoly a = DensePoly::from_lacunary(parse_poly(ft, n));
            const DensePoly b = DensePoly::from_lacunary(parse_poly(other, n));
            const std::string g = format_poly(gcd_multivariate(a, b).to_lacunary());
            if (gin.json) std::cout << ojson(g).dump() << "\n";
            else std::cout << g << "\n";
        } else if (*fdense) {
            const LacunaryPoly f = fdin.poly();
            const DensePoly d = DensePoly::from_lacunary(f);
            FactorList fl;
            if (d.active_variables().size() <= 1) {
                std::optional<unsigned> cap;
                if (!caps.empty()) cap = static_cast<unsigned>(parse_ints(caps).front().get_ui());
                fl = factor_univariate(d, cap);
            } else {
                std::optional<std::pair<unsigned, unsigned>> cp;
                if (!caps.empty()) {
                    const auto c = parse_ints(caps);
                    if (c.size() != 2) throw std::invalid_argument("--caps takes two values for a bivariate input");
                    cp = std::make_pair(static_cast<unsigned>(c[0].get_ui()), static_cast<unsigned>(c[1].get_ui()));
                }
                fl = factor_bivariate(d, cp);
            }
            if (fdin.json) {
                ojson a = ojson::array();
                for (const auto& x : fl.factors) {
                    a.push_back({{"poly", format_poly(x.factor.to_lacunary())},
                                 {"mult", x.multiplicity},
                                 {"certified", x.certified}});
                }
                std::cout << ojson{{"unit", fl.unit.get_str()}, {"factors", a}}.dump() << "\n";
            } else {
                std::cout << "unit\t" << fl.unit.get_str() << "\n";
                for (const auto& x : fl.factors) {
                    std::cout << x.multiplicity << "\t" << format_poly(x.factor.to_lacunary())
                              << (x.certified ? "" : "\t(not certified)") << "\n";
                }
            }
        } else if (*verify) {
            const std::string ft = vin.text();
            std::size_t n = vin.nvars ? vin.nvars : infer_arity(ft);
            if (!vin.nvars) {
                for (const auto& c : claims) n = std::max(n, infer_arity(c));
            }
            const LacunaryPoly f = parse_poly(ft, n);
            std::vector<Claim> cl;
            for (std::size_t i = 0; i < claims.size(); ++i) {
                cl.push_back(Claim{parse_poly(claims[i], n), i < claim_mults.size() ? claim_mults[i] : 1u});
            }
            const auto verdicts = verify_factors(f, cl, trials, seed, guard);
            if (vin.json) {
                std::cout << to_json(verdicts, -1) << "\n";
            } else {
                for (const auto& x : verdicts) {
                    std::cout << (x.match() ? "match" : "mismatch") << "\tclaimed " << x.claimed << "\tfound "
                              << x.found << "\t" << format_poly(x.factor) << "\n";
                }
            }
        }
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
