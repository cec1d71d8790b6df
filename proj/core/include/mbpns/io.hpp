#ifndef MBPNS_IO_HPP_
#define MBPNS_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mbpns/geometry.hpp"
#include "mbpns/reconstruct.hpp"
#include "mbpns/sampling.hpp"
#include "mbpns/signal.hpp"
#include "mbpns/stability.hpp"
#include "mbpns/vandermonde.hpp"

namespace mbpns::io {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

// {"d":int,"M":int,"N":int,"Delta":[num,den],"delta":[num,den],"T":[num,den],"seed":int}
// T and seed are optional. Rationals are two-element integer arrays; floating
// point values anywhere in the document are rejected with FormatError.
SamplingConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SamplingConfig& cfg);

// [{"nu":[[num,den],...],"re":float,"im":float}, ...] in ascending frequency order.
nlohmann::json signal_to_json(const MultibandSignal& sig);
// Validates spectrum membership and grid alignment through MultibandSignal.
MultibandSignal signal_from_json(const nlohmann::json& j, const SamplingConfig& cfg);

// Header j_1..j_d,k_1..k_d,re,im then one row per sample, lexicographic in (j, k).
std::string samples_to_csv(const SampleGrid& grid);
SampleGrid samples_from_csv(const std::string& text, const SamplingConfig& cfg);

nlohmann::json report_to_json(const ReconstructionReport& report, double wall_time_ms);
nlohmann::json stability_to_json(const StabilityReport& report);

std::string bounds_to_csv(const std::vector<BoundsRow>& rows);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace mbpns::io

#endif  // MBPNS_IO_HPP_
