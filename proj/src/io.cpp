#include "oscm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace oscm::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

json request_json(const Request& r) { return json::array({r.a, r.b}); }

Request request_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        parse_error("request must be a pair of integers, got " + j.dump());
    }
    const int x = j[0].get<int>();
    const int y = j[1].get<int>();
    if (x == y) parse_error("request " + j.dump() + " repeats a vertex");
    return make_request(x, y);
}

} // namespace

Instance instance_from_json(const json& j) {
    if (!j.is_object()) parse_error("instance must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) parse_error("instance needs integer field 'n'");
    if (j.contains("k") && (!j["k"].is_number_integer() || j["k"].get<int>() != 2)) {
        parse_error("only k = 2 is supported");
    }
    Instance inst;
    inst.n = j["n"].get<int>();
    const std::string reg = j.value("regularity", std::string("general"));
    const auto parsed = regularity_from_string(reg);
    if (!parsed) parse_error("unknown regularity '" + reg + "'");
    inst.regularity = *parsed;
    if (!j.contains("requests") || !j["requests"].is_array()) parse_error("instance needs array field 'requests'");
    for (const auto& r : j["requests"]) inst.requests.push_back(request_from_json(r));
    if (auto v = validate_instance(inst); !v.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& s : v) msg += " " + s + ";";
        parse_error(msg);
    }
    return inst;
}

json instance_to_json(const Instance& inst) {
    json reqs = json::array();
    for (const auto& r : inst.requests) reqs.push_back(request_json(r));
    return {{"n", inst.n}, {"k", 2}, {"regularity", to_string(inst.regularity)}, {"requests", reqs}};
}

Instance load_instance(const std::filesystem::path& path) {
    try {
        return instance_from_json(json::parse(read_text(path)));
    } catch (const json::exception& e) {
        parse_error(path.string() + ": " + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) parse_error(path.string() + ": " + e.what());
        throw;
    }
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    write_text(path, instance_to_json(inst).dump(2) + "\n");
}

json trace_to_json(const Trace& trace) {
    json steps = json::array();
    for (const auto& st : trace.steps) {
        steps.push_back({{"request", request_json(st.request)},
                         {"slot", st.slot},
                         {"edge_edge", st.edge_edge},
                         {"edge_arrow", st.edge_arrow ? json(*st.edge_arrow) : json(nullptr)}});
    }
    return {{"n", trace.n},
            {"regularity", to_string(trace.regularity)},
            {"algorithm", trace.algorithm},
            {"source", trace.source},
            {"steps", steps}};
}

Trace trace_from_json(const json& j) {
    try {
        Trace t;
        t.n = j.at("n").get<int>();
        const auto reg = regularity_from_string(j.value("regularity", std::string("general")));
        if (!reg) parse_error("unknown regularity in trace");
        t.regularity = *reg;
        t.algorithm = j.value("algorithm", std::string());
        t.source = j.value("source", std::string());
        t.final_state = PlacementState(t.n);
        for (const auto& s : j.at("steps")) {
            TraceStep st;
            st.request = request_from_json(s.at("request"));
            st.slot = s.at("slot").get<int>();
            st.edge_edge = s.at("edge_edge").get<std::int64_t>();
            if (s.contains("edge_arrow") && !s["edge_arrow"].is_null()) st.edge_arrow = s["edge_arrow"].get<std::int64_t>();
            t.final_state = t.final_state.apply(st.request, st.slot);
            t.steps.push_back(st);
        }
        return t;
    } catch (const json::exception& e) {
        parse_error(std::string("malformed trace: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        parse_error(std::string("malformed trace: ") + e.what());
    }
}

Trace load_trace(const std::filesystem::path& path) {
    try {
        return trace_from_json(json::parse(read_text(path)));
    } catch (const json::exception& e) {
        parse_error(path.string() + ": " + e.what());
    }
}

json findings_to_json(const std::vector<AuditFinding>& findings) {
    json out = json::array();
    for (const auto& f : findings) out.push_back({{"step", f.step}, {"kind", to_string(f.kind)}, {"detail", f.detail}});
    return out;
}

json report_to_json(const RatioReport& r) {
    json hist = json::object();
    for (PairKind k : all_pair_kinds) hist[to_string(k)] = r.histogram[index_of(k)];
    json out = {{"algorithm", r.algorithm},
                {"source", r.source},
                {"n", r.n},
                {"seed", r.seed},
                {"alg_crossings", r.alg_crossings},
                {"opt_crossings", r.opt_crossings},
                {"opt_exact", r.opt_exact},
                {"opt_method", r.opt_method},
                {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)},
                {"ratio_infinite", r.ratio_infinite},
                {"pair_type_histogram", hist},
                {"pairwise_unavoidable", r.pairwise_unavoidable},
                {"audit_flags", findings_to_json(r.findings)}};
    if (r.trace) out["trace"] = trace_to_json(*r.trace);
    return out;
}

json sweep_to_json(const SweepSummary& s, bool include_reports) {
    json hist = json::object();
    for (PairKind k : all_pair_kinds) hist[to_string(k)] = s.histogram[index_of(k)];
    json trials = json::array();
    for (const auto& t : s.trials) {
        json row = {{"index", t.index}, {"seed", t.seed}, {"n", t.n}};
        if (t.report) {
            row["ratio"] = t.report->ratio ? json(*t.report->ratio) : json(nullptr);
            row["violations"] = t.report->findings.size();
            if (include_reports) row["report"] = report_to_json(*t.report);
        } else {
            row["error"] = t.error;
        }
        trials.push_back(row);
    }
    return {{"max_ratio", s.max_ratio},
            {"mean_ratio", s.mean_ratio},
            {"violation_count", s.violation_count},
            {"error_count", s.error_count},
            {"infinite_ratio_count", s.infinite_ratio_count},
            {"pair_type_histogram", hist},
            {"trials", trials}};
}

std::string format_ratio(const std::optional<double>& ratio) {
    if (!ratio) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", *ratio);
    return buf;
}

std::string csv_header() { return "seed,n,alg,source,alg_crossings,opt_crossings,ratio,violations"; }

std::string csv_row(const RatioReport& r) {
    std::ostringstream os;
    os << r.seed << ',' << r.n << ',' << r.algorithm << ',' << r.source << ',' << r.alg_crossings << ','
       << r.opt_crossings << ',' << format_ratio(r.ratio) << ',' << r.findings.size();
    return os.str();
}

std::string sweep_csv(const SweepSummary& s) {
    std::string out = csv_header() + "\n";
    for (const auto& t : s.trials) {
        if (t.report) out += csv_row(*t.report) + "\n";
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw Error(ErrorCode::InvalidArgument, "failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::Parse, "cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace oscm::io
