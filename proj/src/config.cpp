#include "tsnsim/config.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tsnsim {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(Scheduler s) {
    switch (s) {
        case Scheduler::Cqf: return "cqf";
        case Scheduler::Paternoster: return "paternoster";
        case Scheduler::Cqf3q: return "cqf3q";
    }
    return "?";
}

const char* to_string(StKind k) {
    return k == StKind::Periodic ? "periodic" : "sporadic";
}

std::int64_t RunConfig::reservation_bits() const {
    const auto epoch_bits =
        static_cast<double>(cycle_time_ns * kLinkRateBps / kSecond);
    return std::llround(reservation_fraction * epoch_bits);
}

SweepConfig::SweepConfig() {
    pi.resize(40);
    std::iota(pi.begin(), pi.end(), std::int64_t{1});
    st_intensity_bps = {1'000'000'000};
}

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& why) {
    throw ConfigError("config key \"" + key + "\": " + why);
}

std::int64_t to_int64(const json& v, const std::string& key) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_unsigned()) return static_cast<std::int64_t>(v.get<std::uint64_t>());
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::floor(d) == d && std::abs(d) < 9.0e15) {
            return static_cast<std::int64_t>(d);
        }
    }
    fail(key, "expected an integer");
}

std::uint64_t to_uint64(const json& v, const std::string& key) {
    const std::int64_t x = to_int64(v, key);
    if (x < 0) fail(key, "must be non-negative");
    return static_cast<std::uint64_t>(x);
}

double to_double(const json& v, const std::string& key) {
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
}

std::string to_str(const json& v, const std::string& key) {
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
}

// A sweepable integer knob: either a scalar or {"from": a, "to": b, "step": s}.
std::vector<std::int64_t> parse_sweepable(const json& v,
                                          const std::string& key) {
    if (v.is_number()) return {to_int64(v, key)};
    if (!v.is_object()) fail(key, "expected an integer or {from,to,step}");
    for (const auto& item : v.items()) {
        if (item.key() != "from" && item.key() != "to" &&
            item.key() != "step") {
            fail(key, "unknown range field \"" + item.key() + "\"");
        }
    }
    if (!v.contains("from") || !v.contains("to")) {
        fail(key, "range needs both \"from\" and \"to\"");
    }
    const std::int64_t from = to_int64(v.at("from"), key + ".from");
    const std::int64_t to = to_int64(v.at("to"), key + ".to");
    const std::int64_t step =
        v.contains("step") ? to_int64(v.at("step"), key + ".step") : 1;
    if (step < 1) fail(key, "range step must be >= 1");
    if (to < from) fail(key, "empty range (to < from)");
    std::vector<std::int64_t> out;
    for (std::int64_t x = from; x <= to; x += step) out.push_back(x);
    return out;
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        "scheduler",       "switches",
        "ttl",             "cycle_time_ns",
        "st_window_ns",    "prop_delay_ns",
        "st_kind",         "pi",
        "st_intensity_bps", "be_intensity_bps",
        "st_frame_bytes",  "be_frame_bytes",
        "queue_bits",      "reservation_fraction",
        "sim_limit_ns",    "warmup_ns",
        "st_phase_offset_ns", "hurst",
        "seed",            "replications"};
    return keys;
}

}  // namespace

SweepConfig parse_config(const std::string& json_text,
                         std::vector<std::string>* warnings) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    for (const auto& item : doc.items()) {
        if (known_keys().count(item.key()) == 0) {
            throw ConfigError("unknown config key \"" + item.key() + "\"");
        }
    }

    SweepConfig cfg;
    if (doc.contains("scheduler")) {
        const std::string s = to_str(doc["scheduler"], "scheduler");
        if (s == "cqf") cfg.scheduler = Scheduler::Cqf;
        else if (s == "paternoster") cfg.scheduler = Scheduler::Paternoster;
        else if (s == "cqf3q") cfg.scheduler = Scheduler::Cqf3q;
        else fail("scheduler", "must be cqf, paternoster, or cqf3q");
    }
    if (doc.contains("st_kind")) {
        const std::string s = to_str(doc["st_kind"], "st_kind");
        if (s == "periodic") cfg.st_kind = StKind::Periodic;
        else if (s == "sporadic") cfg.st_kind = StKind::Sporadic;
        else fail("st_kind", "must be periodic or sporadic");
    }
    if (doc.contains("switches")) {
        cfg.switches = static_cast<int>(to_int64(doc["switches"], "switches"));
        if (cfg.switches < 2) fail("switches", "ring needs at least 2 switches");
    }
    if (doc.contains("ttl")) {
        cfg.ttl = static_cast<int>(to_int64(doc["ttl"], "ttl"));
        if (cfg.ttl < 1) fail("ttl", "must be >= 1");
    }
    if (doc.contains("cycle_time_ns")) {
        cfg.cycle_time_ns = to_int64(doc["cycle_time_ns"], "cycle_time_ns");
        if (cfg.cycle_time_ns <= 0) fail("cycle_time_ns", "must be > 0");
    }
    if (doc.contains("st_window_ns")) {
        cfg.st_window_ns = to_int64(doc["st_window_ns"], "st_window_ns");
        if (cfg.st_window_ns <= 0) fail("st_window_ns", "must be > 0");
    }
    if (cfg.st_window_ns > cfg.cycle_time_ns) {
        fail("st_window_ns", "must not exceed cycle_time_ns");
    }
    if (doc.contains("prop_delay_ns")) {
        cfg.prop_delay_ns = to_int64(doc["prop_delay_ns"], "prop_delay_ns");
        if (cfg.prop_delay_ns < 0) fail("prop_delay_ns", "must be >= 0");
    }
    if (doc.contains("pi")) {
        cfg.pi = parse_sweepable(doc["pi"], "pi");
        for (std::int64_t v : cfg.pi) {
            if (v < 1) fail("pi", "frames per cycle must be >= 1");
            if (v > 40 && warnings) {
                warnings->push_back(
                    "pi " + std::to_string(v) +
                    " is outside the reference range [1, 40]");
                break;
            }
        }
    }
    if (doc.contains("st_intensity_bps")) {
        cfg.st_intensity_bps =
            parse_sweepable(doc["st_intensity_bps"], "st_intensity_bps");
        for (std::int64_t v : cfg.st_intensity_bps) {
            if (v <= 0) fail("st_intensity_bps", "must be > 0");
        }
    }
    if (doc.contains("be_intensity_bps")) {
        cfg.be_intensity_bps =
            to_int64(doc["be_intensity_bps"], "be_intensity_bps");
        if (cfg.be_intensity_bps <= 0) fail("be_intensity_bps", "must be > 0");
    }
    if (doc.contains("st_frame_bytes")) {
        cfg.st_frame_bytes =
            static_cast<int>(to_int64(doc["st_frame_bytes"], "st_frame_bytes"));
        if (cfg.st_frame_bytes <= 0) fail("st_frame_bytes", "must be > 0");
    }
    if (doc.contains("be_frame_bytes")) {
        cfg.be_frame_bytes =
            static_cast<int>(to_int64(doc["be_frame_bytes"], "be_frame_bytes"));
        if (cfg.be_frame_bytes <= 0) fail("be_frame_bytes", "must be > 0");
    }
    if (doc.contains("queue_bits")) {
        cfg.queue_bits = to_int64(doc["queue_bits"], "queue_bits");
        if (cfg.queue_bits <= 0) fail("queue_bits", "must be > 0");
    }
    if (doc.contains("reservation_fraction")) {
        cfg.reservation_fraction =
            to_double(doc["reservation_fraction"], "reservation_fraction");
        if (!(cfg.reservation_fraction > 0.0)) {
            fail("reservation_fraction", "must be > 0");
        }
    }
    if (doc.contains("sim_limit_ns")) {
        cfg.sim_limit_ns = to_int64(doc["sim_limit_ns"], "sim_limit_ns");
        if (cfg.sim_limit_ns <= 0) fail("sim_limit_ns", "must be > 0");
    }
    if (doc.contains("warmup_ns")) {
        cfg.warmup_ns = to_int64(doc["warmup_ns"], "warmup_ns");
        if (cfg.warmup_ns < 0) fail("warmup_ns", "must be >= 0");
    }
    if (cfg.warmup_ns >= cfg.sim_limit_ns) {
        fail("warmup_ns", "must be smaller than sim_limit_ns");
    }
    if (doc.contains("st_phase_offset_ns")) {
        cfg.st_phase_offset_ns =
            to_int64(doc["st_phase_offset_ns"], "st_phase_offset_ns");
        if (cfg.st_phase_offset_ns < 0) {
            fail("st_phase_offset_ns", "must be >= 0");
        }
    }
    if (doc.contains("hurst")) {
        const double h = to_double(doc["hurst"], "hurst");
        if (h != 0.5) {
            fail("hurst",
                 "only 0.5 (memoryless arrivals) is supported");
        }
    }
    if (doc.contains("seed")) cfg.seed = to_uint64(doc["seed"], "seed");
    if (doc.contains("replications")) {
        cfg.replications =
            static_cast<int>(to_int64(doc["replications"], "replications"));
        if (cfg.replications < 1) fail("replications", "must be >= 1");
    }
    return cfg;
}

SweepConfig load_config_file(const std::string& path,
                             std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), warnings);
}

std::string dump_default_config() {
    ordered_json doc;
    doc["scheduler"] = "cqf";
    doc["switches"] = 6;
    doc["ttl"] = 3;
    doc["cycle_time_ns"] = 50'000;
    doc["st_window_ns"] = 25'000;
    doc["prop_delay_ns"] = 500;
    doc["st_kind"] = "periodic";
    doc["pi"] = {{"from", 1}, {"to", 40}, {"step", 1}};
    doc["st_intensity_bps"] = 1'000'000'000;
    doc["be_intensity_bps"] = 1'000'000'000;
    doc["st_frame_bytes"] = 64;
    doc["be_frame_bytes"] = 580;
    doc["queue_bits"] = 524'288;
    doc["reservation_fraction"] = 1.0;
    doc["sim_limit_ns"] = 1'000'000'000;
    doc["warmup_ns"] = 10'000'000;
    doc["st_phase_offset_ns"] = 0;
    doc["hurst"] = 0.5;
    doc["seed"] = 1;
    doc["replications"] = 1;
    return doc.dump(2) + "\n";
}

}  // namespace tsnsim
