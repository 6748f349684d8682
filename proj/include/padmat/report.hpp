#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable verification reports.
 *
 * Every verification suite produces one Report. Serialization is
 * deterministic: nlohmann::json keeps object keys sorted, and all numbers
 * that could exceed double range are rendered as canonical strings.
 */

#include <nlohmann/json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padmat {

struct Failure {
    long long n = 0;
    std::optional<long long> m;  // set for pairwise checks
    std::string expected;
    std::string actual;
    std::string context;
};

struct Report {
    std::string proposition;
    std::string param_a = "a";  // canonical rational strings; "a"/"b" when symbolic
    std::string param_b = "b";
    long long max_n = 0;
    bool skipped = false;
    std::vector<Failure> failures;
    long long elapsed_ms = 0;

    bool passed() const { return !skipped && failures.empty(); }
    std::string status() const { return skipped ? "skipped" : failures.empty() ? "pass" : "fail"; }

    void fail(long long n, std::string expected, std::string actual, std::string context) {
        failures.push_back({n, std::nullopt, std::move(expected), std::move(actual), std::move(context)});
    }
    void fail_pair(long long n, long long m, std::string expected, std::string actual, std::string context) {
        failures.push_back({n, m, std::move(expected), std::move(actual), std::move(context)});
    }
    /// Append another report's failures, tagging their context.
    void absorb(const Report& other, const std::string& tag) {
        for (Failure f : other.failures) {
            f.context = tag.empty() ? f.context : tag + ": " + f.context;
            failures.push_back(std::move(f));
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& f : failures) {
            nlohmann::json jf{{"n", f.n}, {"expected", f.expected}, {"actual", f.actual}, {"context", f.context}};
            if (f.m) jf["m"] = *f.m;
            fails.push_back(std::move(jf));
        }
        return nlohmann::json{
            {"schema", 1},
            {"proposition", proposition},
            {"params", {{"a", param_a}, {"b", param_b}}},
            {"max_n", max_n},
            {"status", status()},
            {"failures", std::move(fails)},
            {"elapsed_ms", elapsed_ms},
        };
    }
};

/// Wall-clock helper for the elapsed_ms report field.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace padmat
