#include "pw/serialize.hpp"

#include <fstream>
#include <sstream>

#include "pw/errors.hpp"

namespace pw {

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("rational entries must be strings like \"p/q\"");
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError(std::string(what) + " must contain integers");
        out.push_back(e.get<int>());
    }
    return out;
}

json int_list_json(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x);
    return out;
}

json parts_json(const Partition& alpha) {
    json parts = json::array();
    for (const auto& p : alpha.parts()) parts.push_back(int_list_json(p));
    return parts;
}

Partition parts_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("parts must be an array of arrays");
    std::vector<Partition::Part> parts;
    for (const auto& p : j) parts.push_back(int_list(p, "part"));
    return Partition(std::move(parts));
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"size", m.size()}, {"rows", std::move(rows)}};
}

QMatrix matrix_from_json(const json& j) {
    const json& size_j = field(j, "size");
    if (!size_j.is_number_integer() || size_j.get<std::int64_t>() < 1) {
        throw ParseError("matrix size must be a positive integer");
    }
    const auto s = size_j.get<std::size_t>();
    const json& rows = field(j, "rows");
    if (!rows.is_array() || rows.size() != s) {
        throw ParseError("matrix must have exactly " + std::to_string(s) + " rows");
    }
    QMatrix m(s);
    for (std::size_t r = 0; r < s; ++r) {
        if (!rows[r].is_array() || rows[r].size() != s) {
            throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(s) +
                             " entries (non-square data)");
        }
        for (std::size_t c = 0; c < s; ++c) m(r, c) = rational_from_json(rows[r][c]);
    }
    return m;
}

json admissible_to_json(const AdmissiblePoly& f) {
    json out = json::array();
    for (const auto& [key, c] : f.coeffs()) {
        out.push_back(json{{"sigma", int_list_json(key.sigma.images())},
                           {"parts", parts_json(key.alpha)},
                           {"coeff", c.to_string()}});
    }
    return out;
}

AdmissiblePoly admissible_from_json(const json& j) {
    const json* records = &j;
    std::optional<int> n;
    std::optional<OmegaSet> omega;
    if (j.is_object()) {
        n = field(j, "n").get<int>();
        omega = OmegaSet(int_list(field(j, "omega"), "omega"));
        records = &field(j, "terms");
    }
    if (!records->is_array()) throw ParseError("admissible polynomial must be a list of records");
    if (records->empty() && !n) {
        throw ParseError("empty record list: use the {\"n\", \"omega\", \"terms\"} form");
    }
    if (!n) {
        const auto& first = (*records)[0];
        n = static_cast<int>(field(first, "sigma").size());
        omega = parts_from_json(field(first, "parts")).support();
    }
    AdmissiblePoly f(*n, *omega);
    for (const auto& rec : *records) {
        f.add(Permutation(int_list(field(rec, "sigma"), "sigma")), parts_from_json(field(rec, "parts")),
              rational_from_json(field(rec, "coeff")));
    }
    return f;
}

json pcpoly_to_json(const PCPoly& p) {
    json out = json::array();
    for (const auto& [w, c] : p.terms()) out.push_back(json{{"word", w.to_string()}, {"coeff", c.to_string()}});
    return out;
}

json partitions_to_json(const std::vector<Partition>& parts) {
    json out = json::array();
    for (const auto& p : parts) out.push_back(parts_json(p));
    return out;
}

json gform_to_json(const GFormPoly& g) {
    json terms = json::array();
    for (const auto& [key, c] : g.coeffs()) {
        terms.push_back(json{{"sigma", int_list_json(key.sigma.images())},
                             {"j", key.j},
                             {"parts", parts_json(key.alpha)},
                             {"coeff", c.to_string()}});
    }
    return json{{"n", g.n()},
                {"omega", int_list_json(g.omega().elements())},
                {"omegabar", int_list_json(g.omegabar())},
                {"terms", std::move(terms)}};
}

json reduction_to_json(const ReductionStep& step) {
    return json{{"k", step.k},
                {"omegabar", int_list_json(step.omegabar)},
                {"branch", to_string(step.branch)},
                {"g", gform_to_json(step.g)},
                {"pi", admissible_to_json(step.pi_of_g)},
                {"rewritten", step.rewritten ? admissible_to_json(*step.rewritten) : json(nullptr)}};
}

json trace_to_json(const std::vector<TraceStep>& trace) {
    json out = json::array();
    for (const auto& t : trace) {
        out.push_back(json{{"k", t.k}, {"omegabar", int_list_json(t.omegabar)}, {"branch", to_string(t.branch)}});
    }
    return out;
}

json witness_to_json(const WitnessAssignment& w, const QMatrix& target, bool verified,
                     const std::vector<TraceStep>& trace) {
    json xs = json::object();
    for (const auto& [i, m] : w.xs()) xs[std::to_string(i)] = matrix_to_json(m);
    json us = json::object();
    for (const auto& [om, m] : w.us()) us[std::to_string(om)] = matrix_to_json(m);
    return json{{"s", w.size()},
                {"x", std::move(xs)},
                {"u", std::move(us)},
                {"target", matrix_to_json(target)},
                {"verified", verified},
                {"trace", trace_to_json(trace)}};
}

WitnessDocument witness_from_json(const json& j) {
    const json& s_j = field(j, "s");
    if (!s_j.is_number_integer() || s_j.get<std::int64_t>() < 1) throw ParseError("s must be a positive integer");
    WitnessDocument doc;
    doc.assignment = WitnessAssignment(s_j.get<std::size_t>());
    auto key_int = [](const std::string& k) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(k, &used);
            if (used != k.size()) throw ParseError("bad variable key '" + k + "'");
            return v;
        } catch (const std::logic_error&) {
            throw ParseError("bad variable key '" + k + "'");
        }
    };
    for (const auto& [k, m] : field(j, "x").items()) doc.assignment.set_x(key_int(k), matrix_from_json(m));
    if (j.contains("u")) {
        for (const auto& [k, m] : j.at("u").items()) doc.assignment.set_u(key_int(k), matrix_from_json(m));
    }
    if (j.contains("target") && !j.at("target").is_null()) doc.target = matrix_from_json(j.at("target"));
    if (j.contains("verified")) doc.verified = j.at("verified").get<bool>();
    if (j.contains("trace")) {
        for (const auto& t : j.at("trace")) {
            TraceStep step;
            step.k = field(t, "k").get<std::size_t>();
            step.omegabar = int_list(field(t, "omegabar"), "omegabar");
            const auto b = field(t, "branch").get<std::string>();
            if (b != "pi" && b != "rewrite") throw ParseError("branch must be \"pi\" or \"rewrite\"");
            step.branch = b == "pi" ? Branch::PiNonzero : Branch::RewriteNonzero;
            doc.trace.push_back(std::move(step));
        }
    }
    return doc;
}

json report_to_json(const RunReport& r) {
    return json{{"polynomial", r.polynomial},
                {"d", r.d},
                {"s", r.s},
                {"size_bound", r.size_bound},
                {"verified", r.verified},
                {"wall_time_ms", r.wall_time_ms},
                {"trace", trace_to_json(r.trace)},
                {"field", r.field}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what(), e.byte);
    }
}

}  // namespace pw
