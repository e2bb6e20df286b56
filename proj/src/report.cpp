#include "lagsdp/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lagsdp {

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

} // namespace

std::string emit_report(const std::vector<RunReport>& reports, ReportFormat format,
                        bool include_times) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "schema,instance,n,m,k,p,solver,seed,sdp_b,ld,lb,opt,rel_gap_closed";
        if (include_times) out << ",t_sdp,t_heur,t_pack,t_solve";
        out << '\n';
        for (const auto& r : reports) {
            out << 1 << ',' << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.k << ','
                << r.p << ',' << r.solver << ',' << r.seed << ',' << fixed(r.sdp_b, 2) << ','
                << fixed(r.ld, 2) << ',' << fixed(r.lb, 2) << ',';
            if (r.opt) out << fixed(*r.opt, 2);
            out << ',';
            if (r.rel_gap_closed) out << fixed(*r.rel_gap_closed, 1);
            if (include_times)
                out << ',' << fixed(r.times.sdp, 3) << ',' << fixed(r.times.heuristic, 3) << ','
                    << fixed(r.times.packing, 3) << ',' << fixed(r.times.solver, 3);
            out << '\n';
        }
        return out.str();
    }

    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["instance"] = r.instance_id;
        j["n"] = r.n;
        j["m"] = r.m;
        j["k"] = r.k;
        j["p"] = r.p;
        j["solver"] = r.solver;
        j["seed"] = r.seed;
        j["sdp_b"] = r.sdp_b;
        j["ld"] = r.ld;
        j["lb"] = r.lb;
        if (r.opt) j["opt"] = *r.opt;
        if (r.rel_gap_closed) j["rel_gap_closed"] = *r.rel_gap_closed;
        if (include_times) {
            j["t_sdp"] = r.times.sdp;
            j["t_heur"] = r.times.heuristic;
            j["t_pack"] = r.times.packing;
            j["t_solve"] = r.times.solver;
        }
        out << j.dump() << '\n';
    }
    return out.str();
}

std::vector<RunReport> parse_reports_json_lines(const std::string& text) {
    std::vector<RunReport> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        RunReport r;
        r.instance_id = j.at("instance").get<std::string>();
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        r.k = j.at("k").get<int>();
        r.p = j.at("p").get<int>();
        r.solver = j.at("solver").get<std::string>();
        r.seed = j.at("seed").get<uint64_t>();
        r.sdp_b = j.at("sdp_b").get<double>();
        r.ld = j.at("ld").get<double>();
        r.lb = j.at("lb").get<double>();
        if (j.contains("opt")) r.opt = j.at("opt").get<double>();
        if (j.contains("rel_gap_closed")) r.rel_gap_closed = j.at("rel_gap_closed").get<double>();
        if (j.contains("t_sdp")) {
            r.times.sdp = j.at("t_sdp").get<double>();
            r.times.heuristic = j.at("t_heur").get<double>();
            r.times.packing = j.at("t_pack").get<double>();
            r.times.solver = j.at("t_solve").get<double>();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace lagsdp
