#include "config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rdut {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw config_error("config: field '" + field + "': " + what);
}

double require_number(const json& obj, const std::string& key, const std::string& label) {
    if (!obj.contains(key)) fail(label, "missing");
    if (!obj.at(key).is_number()) fail(label, "must be a number");
    return obj.at(key).get<double>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& label) {
    if (!obj.contains(key)) fail(label, "missing");
    if (!obj.at(key).is_string()) fail(label, "must be a string");
    return obj.at(key).get<std::string>();
}

UtilityFunction parse_utility(const json& u) {
    const std::string fam = require_string(u, "family", "utility.family");
    if (fam == "crra") {
        try {
            return UtilityFunction::crra(require_number(u, "gamma", "utility.gamma"));
        } catch (const std::invalid_argument& e) {
            fail("utility.gamma", e.what());
        }
    }
    if (fam == "log") return UtilityFunction::log_utility();
    fail("utility.family", "unknown family '" + fam + "' (expect crra | log)");
}

WeightingFunction parse_weighting(const json& w) {
    const std::string fam = require_string(w, "family", "weighting.family");
    try {
        if (fam == "identity") return WeightingFunction::identity();
        if (fam == "tversky_kahneman")
            return WeightingFunction::tversky_kahneman(
                require_number(w, "gamma", "weighting.gamma"));
        if (fam == "prelec")
            return WeightingFunction::prelec(require_number(w, "alpha", "weighting.alpha"),
                                             require_number(w, "beta", "weighting.beta"));
        if (fam == "power") return WeightingFunction::power(require_number(w, "k", "weighting.k"));
    } catch (const std::invalid_argument& e) {
        fail("weighting", e.what());
    }
    fail("weighting.family",
         "unknown family '" + fam + "' (expect identity | tversky_kahneman | prelec | power)");
}

PricingKernel parse_kernel(const json& k) {
    const std::string fam = require_string(k, "family", "kernel.family");
    try {
        if (fam == "lognormal")
            return PricingKernel::lognormal(require_number(k, "mu", "kernel.mu"),
                                            require_number(k, "sigma", "kernel.sigma"));
        if (fam == "constant") return PricingKernel::constant(require_number(k, "c", "kernel.c"));
        if (fam == "tabulated") {
            if (k.contains("csv"))
                return tabulated_kernel_from_csv(require_string(k, "csv", "kernel.csv"));
            if (!k.contains("p") || !k.contains("q"))
                fail("kernel", "tabulated kernel needs 'csv' or arrays 'p' and 'q'");
            std::vector<double> p = k.at("p").get<std::vector<double>>();
            std::vector<double> q = k.at("q").get<std::vector<double>>();
            return PricingKernel::tabulated(std::move(p), std::move(q));
        }
    } catch (const std::invalid_argument& e) {
        fail("kernel", e.what());
    } catch (const json::exception& e) {
        fail("kernel", e.what());
    }
    fail("kernel.family",
         "unknown family '" + fam + "' (expect lognormal | constant | tabulated)");
}

} // namespace

Problem problem_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw config_error("config: top level must be a JSON object");

    Problem p;
    p.x0 = require_number(doc, "x0", "x0");
    if (!doc.contains("utility") || !doc.at("utility").is_object())
        fail("utility", "missing or not an object");
    if (!doc.contains("weighting") || !doc.at("weighting").is_object())
        fail("weighting", "missing or not an object");
    if (!doc.contains("kernel") || !doc.at("kernel").is_object())
        fail("kernel", "missing or not an object");
    p.utility = parse_utility(doc.at("utility"));
    p.weighting = parse_weighting(doc.at("weighting"));
    p.kernel = parse_kernel(doc.at("kernel"));
    if (doc.contains("grid")) {
        const json& g = doc.at("grid");
        if (!g.is_object()) fail("grid", "must be an object");
        if (g.contains("n")) {
            if (!g.at("n").is_number_unsigned() || g.at("n").get<std::uint64_t>() < 16)
                fail("grid.n", "must be an integer >= 16");
            p.grid.n = g.at("n").get<std::size_t>();
        }
        if (g.contains("refine_ends")) {
            if (!g.at("refine_ends").is_boolean()) fail("grid.refine_ends", "must be a boolean");
            p.grid.refine_ends = g.at("refine_ends").get<bool>();
        }
    }
    return p;
}

Problem problem_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return problem_from_json_text(buf.str());
}

PricingKernel tabulated_kernel_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open kernel CSV '" + path + "'");
    std::string line;
    std::vector<double> ps, qs;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("p,", 0) == 0) continue;  // header
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b)) {
            std::ostringstream os;
            os << "config: kernel CSV '" << path << "' line " << lineno << ": expected 'p,quantile'";
            throw config_error(os.str());
        }
        try {
            ps.push_back(std::stod(a));
            qs.push_back(std::stod(b));
        } catch (const std::exception&) {
            std::ostringstream os;
            os << "config: kernel CSV '" << path << "' line " << lineno << ": non-numeric value";
            throw config_error(os.str());
        }
    }
    try {
        return PricingKernel::tabulated(std::move(ps), std::move(qs));
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("config: kernel CSV '") + path + "': " + e.what());
    }
}

} // namespace rdut
