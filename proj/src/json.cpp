#include "json.hpp"
#include "lacuna/driver.hpp"

namespace lacuna {

namespace {

using json = nlohmann::ordered_json;

json factor_array(const std::vector<FactorWithMultiplicity>& v) {
    json a = json::array();
    for (const auto& f : v) a.push_back({{"poly", format_poly(f.factor)}, {"mult", f.multiplicity}});
    return a;
}

const char* mode_name(CertificateMode m) { return m == CertificateMode::Exact ? "exact" : "probabilistic"; }

}  // namespace

std::string to_json(const FactorReport& r, int indent) {
    json monomial = json::object();
    for (std::size_t i = 0; i < r.monomial.size(); ++i) {
        monomial["x" + std::to_string(i + 1)] = r.monomial[i].get_str();
    }
    json residual = json::array();
    for (const auto& d : r.residual) residual.push_back(format_poly(d.to_lacunary()));
    json unresolved = json::array();
    for (const auto& d : r.unresolved) unresolved.push_back(to_string(d));
    json certs = json::array();
    for (const auto& c : r.certificates) {
        json e = {{"poly", format_poly(c.factor)}, {"mult", c.multiplicity}, {"mode", mode_name(c.mode)}};
        if (c.mode == CertificateMode::Probabilistic) {
            e["trials"] = c.trials;
            e["seed"] = c.seed;
        }
        certs.push_back(std::move(e));
    }
    json out;
    out["monomial"] = std::move(monomial);
    out["unidimensional"] = factor_array(r.unidimensional);
    out["multidimensional"] = factor_array(r.multidimensional);
    out["residual"] = std::move(residual);
    out["unresolved"] = std::move(unresolved);
    out["certificates"] = std::move(certs);
    out["warnings"] = r.warnings;
    out["meta"] = {{"seed", r.seed}, {"trials", r.trials}, {"guard", r.guard}};
    return out.dump(indent);
}

std::string to_json(const std::vector<ClaimVerdict>& verdicts, int indent) {
    json a = json::array();
    for (const auto& v : verdicts) {
        a.push_back({{"poly", format_poly(v.factor)},
                     {"claimed", v.claimed},
                     {"found", v.found},
                     {"verdict", v.match() ? "match" : "mismatch"},
                     {"mode", mode_name(v.mode)}});
    }
    return a.dump(indent);
}

std::string to_json(const PartitionResult& r, int indent) {
    json a = json::array();
    for (const auto& s : r.summands) a.push_back(format_poly(s));
    return a.dump(indent);
}

}  // namespace lacuna
