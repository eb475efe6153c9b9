#pragma once

// Check-report record shared by the verification modules, emitted as JSON
// lines: {"check": str, "preset": str, "K_h": int, "K_w": int,
// "residual_terms": int, "pass": bool, "ms": int}.

#include "qheis/series.hpp"

#include <json.hpp>

#include <chrono>
#include <string>

namespace qheis {

struct CheckReport {
    std::string check;
    std::string preset;
    Truncation trunc;
    long long residual_terms = 0;
    bool pass = false;
    long long ms = 0;

    std::string json_line() const {
        nlohmann::ordered_json j;
        j["check"] = check;
        j["preset"] = preset;
        j["K_h"] = trunc.kh;
        j["K_w"] = trunc.kw;
        j["residual_terms"] = residual_terms;
        j["pass"] = pass;
        j["ms"] = ms;
        return j.dump();
    }
};

/// Runs `body` (which accumulates a residual term count) and assembles the
/// report with wall-clock duration; pass iff the residual count is zero.
template <class F>
CheckReport timed_check(const std::string &name, const std::string &preset, Truncation t,
                        F &&body) {
    CheckReport rep;
    rep.check = name;
    rep.preset = preset;
    rep.trunc = t;
    const auto start = std::chrono::steady_clock::now();
    rep.residual_terms = body();
    const auto stop = std::chrono::steady_clock::now();
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    rep.pass = rep.residual_terms == 0;
    return rep;
}

} // namespace qheis
