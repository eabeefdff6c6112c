#ifndef PW_SERIALIZE_HPP
#define PW_SERIALIZE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pw/admissible.hpp"
#include "pw/constructor.hpp"
#include "pw/gform.hpp"
#include "pw/matrix.hpp"
#include "pw/pc_poly.hpp"
#include "pw/witness.hpp"

namespace pw {

using nlohmann::json;

// Rationals are always written as strings ("3/4", "-2").

/// {"size": s, "rows": [["p/q", ...], ...]}
json matrix_to_json(const QMatrix& m);
/// Rejects non-square data, size mismatches and zero denominators with
/// ParseError.
QMatrix matrix_from_json(const json& j);

/// [{"sigma": [...], "parts": [[...], ...], "coeff": "p/q"}, ...]
json admissible_to_json(const AdmissiblePoly& f);
/// Accepts the record list (n and omega inferred from the records) or an
/// object {"n": n, "omega": [...], "terms": [records]}.
AdmissiblePoly admissible_from_json(const json& j);

/// [{"word": "U3*X1", "coeff": "p/q"}, ...]
json pcpoly_to_json(const PCPoly& p);

json partitions_to_json(const std::vector<Partition>& parts);

json gform_to_json(const GFormPoly& g);
json reduction_to_json(const ReductionStep& step);
json trace_to_json(const std::vector<TraceStep>& trace);

/// Parsed form of the witness file.
struct WitnessDocument {
    WitnessAssignment assignment;
    std::optional<QMatrix> target;
    bool verified = false;
    std::vector<TraceStep> trace;
};

/// {"s", "x": {"1": Matrix, ...}, "u": {"w": Matrix, ...}, "target",
///  "verified", "trace": [{"k", "omegabar", "branch": "pi"|"rewrite"}, ...]}
json witness_to_json(const WitnessAssignment& w, const QMatrix& target, bool verified,
                     const std::vector<TraceStep>& trace);
WitnessDocument witness_from_json(const json& j);

struct RunReport {
    std::string polynomial;
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t size_bound = 0;
    bool verified = false;
    double wall_time_ms = 0.0;
    std::vector<TraceStep> trace;
    std::string field = "Q";
};

json report_to_json(const RunReport& r);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
json read_json_file(const std::string& path);

}  // namespace pw

#endif  // PW_SERIALIZE_HPP
