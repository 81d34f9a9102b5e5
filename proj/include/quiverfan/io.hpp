#ifndef QUIVERFAN_IO_HPP
#define QUIVERFAN_IO_HPP

#include "quiverfan/algebra.hpp"

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace quiverfan::io {

/// Key order follows insertion, so output is reproducible and readable.
using Json = nlohmann::ordered_json;

/// A file could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// Schema errors surface as MalformedInput.
Quiver quiver_from_json(const Json& doc);
Weight weight_from_json(const Quiver& quiver, const Json& doc);
/// Values are integers or "n/d" strings.
RatVector flow_from_json(const Quiver& quiver, const Json& doc);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json number(const Integer& x);
/// Integral values as numbers, others as "n/d".
Json number(const Rational& x);

Json quiver_json(const Quiver& quiver);
Json weight_json(const Quiver& quiver, const Weight& theta);
Json flow_json(const Quiver& quiver, const IntVector& flow);
Json flow_json(const Quiver& quiver, const RatVector& flow);
Json vertex_list(const Quiver& quiver, const VertexSet& set);
Json arrow_list(const Quiver& quiver, const ArrowSet& set);

Json wall_json(const Quiver& quiver, const Wall& wall);
Json verdict_json(const Quiver& quiver, const StabilityVerdict& verdict);
Json position_json(const Quiver& quiver, const PositionReport& report);
Json reflexivity_json(const Quiver& quiver, const ReflexivityReport& report);

/// Vertices of the polytope as full flows; lattice points only at full detail.
Json polytope_json(const Quiver& quiver, const FlowPolytope& polytope, bool full);
Json fan_json(const Quiver& quiver, const Fan& fan, const FanChecks& checks);
Json cohomology_json(const Quiver& quiver, const CohomologyTable& table, bool full);
/// Pair keys are "p->q" with vertex ids of the quiver the table was built on.
Json ext_json(const Quiver& quiver, const ExtReport& report, bool full);
Json end_json(const Quiver& quiver, const ExceptionalReport& report);
Json exceptional_json(const Quiver& quiver, const ExceptionalReport& report);

Json error_json(std::string_view code, const std::string& detail);

}  // namespace quiverfan::io

#endif  // QUIVERFAN_IO_HPP
