#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaoforge/catalog.hpp"
#include "gaoforge/constants.hpp"
#include "gaoforge/forms.hpp"
#include "gaoforge/properties.hpp"
#include "gaoforge/sequence.hpp"

namespace gaoforge {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Comma-separated residues in [0, n); "0xK" stands for K zeros.
ResidueSequence parse_sequence(const std::string& literal, const Modulus& m);
/// Inverse of parse_sequence; zero runs of length >= 2 use the 0xK shorthand.
std::string format_sequence(const ResidueSequence& s);

/// "8", "2..16", "12,20,24" or mixes such as "2..5,9". Ascending, deduplicated.
std::vector<Int> parse_moduli(const std::string& spec);
/// "units" or a residue list.
WeightSet parse_weights(const std::string& spec, const Modulus& m);

Json to_json(const SearchStats& s);  // node count only; timings are not reported
Json to_json(const ConstantsRecord& r);
Json to_json(const IdentityReport& r);
Json to_json(const CanonicalProfile& p);
Json to_json(const ExtremalCatalog& c);
Json to_json(const FormTag& t);
Json to_json(const TheoremVerdict& v);
Json to_json(const StructuralAudit& a);
Json to_json(const PropertyTally& t);

struct Failure {
  std::string check;
  std::string detail;
  std::string reproduce;
};

/// Everything a command emits. Rows back the csv and text renderings; the
/// JSON document carries the full results.
struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::array();
  Json properties = Json::array();
  std::vector<Failure> failures;
  bool budget_exhausted = false;
  std::optional<std::string> parse_error;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int exit_code() const;
  Json to_json() const;
};

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s);
std::string render(const Report& r, Format f);

}  // namespace gaoforge
