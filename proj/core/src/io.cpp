#include "mbpns/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "mbpns/error.hpp"

namespace mbpns::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::int64_t require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw FormatError("field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

Rational require_rational(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    throw FormatError("field '" + field + "' must be a [num, den] integer pair");
  const auto num = require_int(j[0], field);
  const auto den = require_int(j[1], field);
  if (den == 0) throw FormatError("field '" + field + "' has zero denominator");
  return Rational(num, den);
}

json rational_to_json(const Rational& r) { return json::array({r.numerator(), r.denominator()}); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw FormatError("line " + std::to_string(line) + ": cannot parse '" + s + "'");
  return v;
}

}  // namespace

SamplingConfig config_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("config must be a JSON object");
  for (const auto* key : {"d", "M", "N", "Delta", "delta"})
    if (!j.contains(key)) throw FormatError(std::string("config is missing '") + key + "'");
  SamplingConfig cfg;
  cfg.d = static_cast<int>(require_int(j["d"], "d"));
  cfg.M = static_cast<int>(require_int(j["M"], "M"));
  cfg.N = Rational(require_int(j["N"], "N"));
  cfg.Delta = require_rational(j["Delta"], "Delta");
  cfg.delta = require_rational(j["delta"], "delta");
  if (j.contains("T")) cfg.T = require_rational(j["T"], "T");
  if (j.contains("seed")) {
    const auto s = require_int(j["seed"], "seed");
    if (s < 0) throw FormatError("field 'seed' must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  return cfg;
}

json config_to_json(const SamplingConfig& cfg) {
  json j;
  j["d"] = cfg.d;
  j["M"] = cfg.M;
  j["N"] = cfg.N.numerator();
  j["Delta"] = rational_to_json(cfg.Delta);
  j["delta"] = rational_to_json(cfg.delta);
  if (cfg.T) j["T"] = rational_to_json(*cfg.T);
  if (cfg.seed) j["seed"] = *cfg.seed;
  return j;
}

json signal_to_json(const MultibandSignal& sig) {
  json out = json::array();
  for (const auto& [nu, a] : sig.coeffs()) {
    json rec;
    json freq = json::array();
    for (const auto& c : nu) freq.push_back(rational_to_json(c));
    rec["nu"] = std::move(freq);
    rec["re"] = a.real();
    rec["im"] = a.imag();
    out.push_back(std::move(rec));
  }
  return out;
}

MultibandSignal signal_from_json(const json& j, const SamplingConfig& cfg) {
  if (!j.is_array()) throw FormatError("signal must be a JSON array");
  Spectrum coeffs;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("nu") || !rec.contains("re") || !rec.contains("im"))
      throw FormatError("signal record needs nu, re, im");
    if (!rec["nu"].is_array()) throw FormatError("signal record 'nu' must be an array");
    if (!rec["re"].is_number() || !rec["im"].is_number())
      throw FormatError("signal record re/im must be numbers");
    RatVec nu;
    for (const auto& c : rec["nu"]) nu.push_back(require_rational(c, "nu"));
    if (!coeffs.emplace(nu, Complex(rec["re"].get<double>(), rec["im"].get<double>())).second)
      throw FormatError("duplicate frequency " + to_string(nu));
  }
  return MultibandSignal(cfg, std::move(coeffs));
}

std::string samples_to_csv(const SampleGrid& grid) {
  const int d = grid.config().d;
  std::string out;
  for (int i = 1; i <= d; ++i) out += "j_" + std::to_string(i) + ",";
  for (int i = 1; i <= d; ++i) out += "k_" + std::to_string(i) + ",";
  out += "re,im\n";
  for (const auto& [key, v] : grid.values()) {
    for (const auto j : key.j) out += std::to_string(j) + ",";
    for (const auto k : key.k) out += std::to_string(k) + ",";
    out += format_double(v.real()) + "," + format_double(v.imag()) + "\n";
  }
  return out;
}

SampleGrid samples_from_csv(const std::string& text, const SamplingConfig& cfg) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw FormatError("sample CSV is empty");
  const auto header = split(line);
  const std::size_t cols = static_cast<std::size_t>(2 * cfg.d + 2);
  if (header.size() != cols) throw FormatError("sample CSV header has wrong column count");
  for (int i = 0; i < cfg.d; ++i) {
    if (header[i] != "j_" + std::to_string(i + 1) || header[cfg.d + i] != "k_" + std::to_string(i + 1))
      throw FormatError("sample CSV header mismatch");
  }
  if (header[cols - 2] != "re" || header[cols - 1] != "im")
    throw FormatError("sample CSV header mismatch");

  std::map<SampleKey, Complex> values;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    if (cells.size() != cols) throw FormatError("line " + std::to_string(lineno) + ": wrong column count");
    SampleKey key{IntVec(cfg.d), IntVec(cfg.d)};
    for (int i = 0; i < cfg.d; ++i) {
      key.j[i] = parse_number<std::int64_t>(cells[i], lineno);
      key.k[i] = parse_number<std::int64_t>(cells[cfg.d + i], lineno);
    }
    const Complex v(parse_number<double>(cells[cols - 2], lineno), parse_number<double>(cells[cols - 1], lineno));
    if (!values.emplace(std::move(key), v).second)
      throw FormatError("line " + std::to_string(lineno) + ": duplicate sample index");
  }
  return SampleGrid(cfg, std::move(values));
}

json report_to_json(const ReconstructionReport& report, double wall_time_ms) {
  json j;
  j["relative_l2_error"] = report.relative_l2_error;
  j["method"] = to_string(report.method);
  j["per_step_residuals"] = report.per_step_residuals;
  j["fallback_frequencies"] = report.fallback_frequencies;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

json stability_to_json(const StabilityReport& r) {
  json j;
  j["A_lower"] = r.A_lower;
  j["B_lower"] = r.B_lower;
  j["B_upper"] = r.B_upper;
  j["tight"] = r.tight;
  j["empirical_min_ratio"] = r.empirical_min_ratio;
  j["empirical_max_ratio"] = r.empirical_max_ratio;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["per_xi_singular_extremes"] = {{"sigma_min", r.sigma_min}, {"sigma_max", r.sigma_max}};
  j["violations"] = violations(r);
  return j;
}

std::string bounds_to_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "M,N,delta_num,delta_den,inv_inf_norm,gautschi_lo,gautschi_hi,vest_lo,vest_hi,two_norm_sq\n";
  for (const auto& r : rows) {
    out += std::to_string(r.M) + "," + to_string(r.N) + "," + std::to_string(r.delta.numerator()) + "," +
           std::to_string(r.delta.denominator()) + "," + format_double(r.inv_inf_norm) + "," +
           format_double(r.gautschi.lower) + "," + format_double(r.gautschi.upper) + "," +
           format_double(r.vest.lower) + "," + format_double(r.vest.upper) + "," +
           format_double(r.two_norm_sq) + "\n";
  }
  return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "d,M,N,Delta,delta,A_lower,B_upper,emp_min,emp_max,sigma_min_sq,sigma_max_sq,tight\n";
  for (const auto& r : rows) {
    out += std::to_string(r.d) + "," + std::to_string(r.M) + "," + to_string(r.N) + "," +
           to_string(r.Delta) + "," + to_string(r.delta) + "," + format_double(r.A_lower) + "," +
           format_double(r.B_upper) + "," + format_double(r.emp_min) + "," + format_double(r.emp_max) +
           "," + format_double(r.sigma_min_sq) + "," + format_double(r.sigma_max_sq) + "," +
           (r.tight ? "true" : "false") + "\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw FormatError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mbpns::io
