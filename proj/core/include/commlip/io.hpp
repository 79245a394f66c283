#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "commlip/campaign.hpp"
#include "commlip/stitching.hpp"

namespace commlip {

/// One decimal float per line. Blank lines and surrounding whitespace are
/// ignored; parsing never consults the locale. Throws FormatError.
std::vector<double> parse_parameter_text(std::string_view text);
std::vector<double> read_parameter_file(const std::filesystem::path& path);

/// Pairs a_k, b_k from two files with the grid; lengths must all agree.
std::vector<GaussianParams> read_parameter_table(const std::filesystem::path& a_path,
                                                 const std::filesystem::path& b_path,
                                                 std::size_t expected);

/// Writes to a sibling temporary file and renames it over `path`.
void atomic_write(const std::filesystem::path& path, std::string_view content);

std::string certificate_to_json(const StitchedCertificate& cert);
StitchedCertificate certificate_from_json(std::string_view text);
StitchedCertificate read_certificate(const std::filesystem::path& path);

/// Columns: c_k, C_k, D_k, a, b, degenerate. D_k is "nan" when `lifted` is
/// shorter than `points` (e.g. a run stopped at a degenerate node).
std::string points_to_csv(const std::vector<BoundPoint>& points, const std::vector<double>& lifted);

std::string campaign_to_json(const CampaignReport& report);

} // namespace commlip
