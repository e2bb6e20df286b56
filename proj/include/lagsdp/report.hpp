#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lagsdp {

struct StageTimes {
    double sdp = 0.0;
    double heuristic = 0.0;
    double packing = 0.0;
    double solver = 0.0;

    bool operator==(const StageTimes&) const = default;
};

struct RunReport {
    std::string instance_id;
    int n = 0, m = 0, k = 0, p = 0;
    double sdp_b = 0.0; // SDP relaxation bound, maximization orientation
    double ld = 0.0;    // best Lagrangian dual bound
    double lb = 0.0;    // heuristic cut value
    std::optional<double> opt;
    std::optional<double> rel_gap_closed; // 100 (sdp_b - ld) / (sdp_b - opt)
    StageTimes times;
    std::string solver;
    uint64_t seed = 0;

    bool operator==(const RunReport&) const = default;
};

enum class ReportFormat { Csv, JsonLines };

// Omit rel_gap_closed when opt is absent or |sdp_b - opt| < 1e-9. CSV rounds
// bounds to 2 decimals and gaps to 1; JSON lines keep full precision and
// round-trip through parse_reports_json_lines. include_times = false drops
// the wall-clock fields (they are the only non-deterministic ones).
std::string emit_report(const std::vector<RunReport>& reports, ReportFormat format,
                        bool include_times = true);

std::vector<RunReport> parse_reports_json_lines(const std::string& text);

} // namespace lagsdp
