#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "u4kit/cgc.hpp"
#include "u4kit/physical.hpp"

namespace u4 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kConvention = "u4kit-v1";
inline constexpr const char* kSchemaVersion = "1";

// fixed 9-significant-digit text used by the table/csv formats
std::string format_real(double x);
// doubled spin as "3" or "7/2"
std::string format_spin(int x2);
// accepts "3", "7/2", "3.5"; throws std::invalid_argument
int parse_spin(const std::string& s);

Json make_document(const std::string& kind, Json labels, Json ordering,
                   std::vector<double> values, double tol);

Json cgc_document(const CgcTable& t, double tol);
CgcTable cgc_from_document(const Json& doc);

Json wigner_document(const Irrep& f, const Irrep& fp, const Irrep& fpp,
                     const ReducedGrid& grid, double tol);
ReducedGrid wigner_from_document(const Json& doc, Irrep& f, Irrep& fp,
                                 Irrep& fpp);

std::filesystem::path cache_path(const std::string& root,
                                 const std::string& kind,
                                 const std::string& labels);
void atomic_write(const std::filesystem::path& path, const std::string& text);
std::optional<Json> load_json(const std::filesystem::path& path);

}  // namespace u4
