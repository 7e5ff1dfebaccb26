#ifndef LAGOBS_JSON_IO_HPP
#define LAGOBS_JSON_IO_HPP

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "lagobs/catalog.hpp"
#include "lagobs/criteria.hpp"
#include "lagobs/homology.hpp"
#include "lagobs/specseq.hpp"

namespace lagobs {

using json = nlohmann::json;

/// Malformed or schema-violating input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"n": int, "known": [[degree, dim], ...], "cap": int | null}
json profile_to_json(const BettiProfile& p);
BettiProfile profile_from_json(const json& j);

json family_to_json(const IsoparametricFamily& f);
IsoparametricFamily family_from_json(const json& j);

// {"kind", "slot", "page", "witness", "profile", "maslov", "nu"}
json verdict_to_json(const VerdictRecord& v);
VerdictRecord verdict_from_json(const json& j);

json report_to_json(const CaseReport& r);
CaseReport report_from_json(const json& j);

json gauss_image_to_json(const GaussImageData& d);

/// Reads and parses a UTF-8 JSON file; FormatError on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);

}  // namespace lagobs

#endif  // LAGOBS_JSON_IO_HPP
