#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "turnover/curve.hpp"
#include "turnover/enumerator.hpp"
#include "turnover/orbifold.hpp"
#include "turnover/surface_complex.hpp"
#include "turnover/torus.hpp"

namespace turnover::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

const char* tool_version();

/// A document that is not well-formed JSON or does not match the schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceDocument {
  Instance instance;
  std::optional<std::string> label;
};

Json to_json(const InstanceDocument& doc);
/// Schema problems raise SchemaError; invalid turnover data raises
/// InvalidInstance.
InstanceDocument instance_from_json(const Json& j);

struct CertificateDocument {
  Certificate certificate;
  std::optional<std::string> timestamp;
};

Json to_json(const CertificateDocument& doc);
CertificateDocument certificate_from_json(const Json& j);

struct TorusCertificateDocument {
  torus::TorusClass torus_class;
  torus::TorusResult result;
  std::optional<std::string> timestamp;
};

Json to_json(const TorusCertificateDocument& doc);
TorusCertificateDocument torus_certificate_from_json(const Json& j);

/// Cell structure dump: walks, edge incidences, vertex counts.
Json complex_to_json(const SurfaceComplex& complex);

Json invariants_to_json(const OrbifoldInvariants& inv);

/// Parses text as JSON, converting parse errors into SchemaError.
Json parse(const std::string& text);

/// ISO-8601 UTC time of now.
std::string utc_timestamp();

}  // namespace turnover::io
