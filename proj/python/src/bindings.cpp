#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lacuna/driver.hpp"

namespace py = pybind11;
using namespace lacuna;

namespace {

// Python ints and fractions.Fraction both print in a form GMP reads.
Rational to_rational(const py::handle& h) {
    Rational r{py::str(h).cast<std::string>()};
    r.canonicalize();
    return r;
}

Integer to_integer(const py::handle& h) { return Integer{py::str(h).cast<std::string>()}; }

ExponentVector to_bounds(const std::vector<py::object>& v) {
    ExponentVector out;
    for (const auto& x : v) out.push_back(to_integer(x));
    return out;
}

LacunaryPoly read(const std::string& text, std::optional<std::size_t> nvars) {
    return parse_poly(text, nvars ? *nvars : infer_arity(text));
}

std::vector<std::string> show(const PartitionResult& r) {
    std::vector<std::string> out;
    for (const auto& s : r.summands) out.push_back(format_poly(s));
    return out;
}

py::object loads(const std::string& json) { return py::module_::import("json").attr("loads")(json); }

}  // namespace

PYBIND11_MODULE(_lacuna, m) {
    m.doc() = "Bounded-degree factors of lacunary polynomials over the rationals.";

    auto base = py::register_exception<Error>(m, "LacunaError");
    py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
    auto guard = py::register_exception<GuardExceeded>(m, "GuardExceeded", base.ptr());
    py::register_exception<EngineLimitation>(m, "EngineLimitation", guard.ptr());

    m.attr("DEFAULT_DENSE_GUARD") = kDefaultDenseGuard;

    m.def("normalize", [](const std::string& text, std::optional<std::size_t> nvars) {
        return format_poly(read(text, nvars));
    }, py::arg("poly"), py::arg("nvars") = py::none());

    m.def("gamma", [](std::size_t l, const py::object& dx, const py::object& dy) {
        return py::int_(py::str(gamma(l, GapParams{to_integer(dx), to_integer(dy)}).get_str()));
    }, py::arg("l"), py::arg("dx") = 1, py::arg("dy") = 1);

    m.def("factors", [](const std::string& text, const std::vector<py::object>& bounds, std::optional<std::size_t> nvars,
                        std::uint64_t seed, unsigned trials, std::size_t dense_guard, bool unidimensional,
                        bool multidimensional) {
        FactorOptions o;
        o.seed = seed;
        o.trials = trials;
        o.dense_guard = dense_guard;
        o.unidimensional = unidimensional;
        o.multidimensional = multidimensional;
        const auto f = read(text, nvars);
        const auto caps = to_bounds(bounds);
        std::string json;
        {
            py::gil_scoped_release unlock;
            json = to_json(bounded_degree_factors(f, caps, o));
        }
        return loads(json);
    }, py::arg("poly"), py::arg("bounds"), py::arg("nvars") = py::none(), py::arg("seed") = 0, py::arg("trials") = 8,
       py::arg("dense_guard") = kDefaultDenseGuard, py::arg("unidimensional") = true, py::arg("multidimensional") = true);

    m.def("verify", [](const std::string& text, const std::vector<std::pair<std::string, unsigned>>& claims,
                       std::optional<std::size_t> nvars, unsigned trials, std::uint64_t seed) {
        const auto f = read(text, nvars);
        std::vector<Claim> cs;
        for (const auto& [g, mult] : claims) cs.push_back(Claim{parse_poly(g, f.nvars()), mult});
        return loads(to_json(verify_factors(f, cs, trials, seed)));
    }, py::arg("poly"), py::arg("claims"), py::arg("nvars") = py::none(), py::arg("trials") = 8, py::arg("seed") = 0);

    m.def("partition", [](const std::string& text, const py::object& v, const py::object& dx, const py::object& dy) {
        return show(partition(parse_poly(text, 2), GapParams{to_integer(dx), to_integer(dy)}, to_rational(v)));
    }, py::arg("poly"), py::arg("v"), py::arg("dx") = 1, py::arg("dy") = 1);

    m.def("bipartition", [](const std::string& text, const py::object& v1, const py::object& v2, const py::object& dx,
                            const py::object& dy) {
        std::optional<Rational> second;
        if (!v2.is_none()) second = to_rational(v2);
        return show(bipartition(parse_poly(text, 2), GapParams{to_integer(dx), to_integer(dy)}, to_rational(v1), second));
    }, py::arg("poly"), py::arg("v1"), py::arg("v2") = py::none(), py::arg("dx") = 1, py::arg("dy") = 1,
       "Pass v2=None for the vertical second pass.");

    m.def("multivariate_partition", [](const std::string& text, const std::vector<py::object>& bounds,
                                       std::optional<std::size_t> nvars) {
        return show(multivariate_partition(read(text, nvars), to_bounds(bounds)));
    }, py::arg("poly"), py::arg("bounds"), py::arg("nvars") = py::none());

    m.def("factor_dense", [](const std::string& text, std::optional<std::size_t> nvars) {
        const auto f = read(text, nvars);
        const auto d = densify(f);
        const FactorList fl = f.nvars() == 1 ? factor_univariate(d.poly) : factor_bivariate(d.poly);
        std::vector<std::pair<std::string, unsigned>> out;
        for (const auto& x : fl.factors) out.emplace_back(format_poly(x.factor.to_lacunary()), x.multiplicity);
        return py::make_tuple(fl.unit.get_str(), out, to_string(d.stripped));
    }, py::arg("poly"), py::arg("nvars") = py::none(),
       "Returns (unit, [(factor, multiplicity)], stripped monomial exponents).");
}
