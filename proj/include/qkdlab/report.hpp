// Copyright 2026 The qkdlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKDLAB_REPORT_HPP
#define QKDLAB_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <ctime>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qkdlab/channel.hpp"
#include "qkdlab/randtest.hpp"
#include "qkdlab/transcript.hpp"

namespace qkdlab {

using json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

/// Everything one experiment run needs. batch_size only groups rounds into
/// job summaries; it never influences keys or statistics.
struct ExperimentConfig {
    std::string protocol;          // "bb84" | "e91"
    std::string family;            // "hadamard" | "sx"
    std::uint64_t rounds = 0;
    std::uint64_t batch_size = 128;
    double readout_epsilon = 0.0;
    double depolarizing_p = 0.0;
    bool eve = false;              // bb84 only
    std::uint64_t master_seed = 0;
    std::string output_path;
};

inline void check_experiment_config(const ExperimentConfig& config) {
    if (config.protocol != "bb84" && config.protocol != "e91") {
        throw std::invalid_argument("config: protocol must be \"bb84\" or \"e91\"");
    }
    basis_family(config.family); // throws on unknown name
    if (config.rounds < 1) {
        throw std::invalid_argument("config: rounds must be >= 1");
    }
    if (config.batch_size < 1) {
        throw std::invalid_argument("config: batch_size must be >= 1");
    }
    if (config.eve && config.protocol == "e91") {
        throw std::invalid_argument(
            "config: the intercept-resend adversary applies to the bb84 transmission channel only");
    }
    check_noise_config(NoiseConfig{config.readout_epsilon, config.depolarizing_p});
}

/// Grouping of consecutive rounds into fixed-size jobs, summary only.
struct BatchSummary {
    std::uint64_t index = 0;
    std::uint64_t first_round = 0;
    std::uint64_t rounds = 0;
    std::uint64_t sifted = 0;
};

struct ExperimentReport {
    int schema_version = kReportSchemaVersion;
    std::string generated_at; // ignorable header, excluded from determinism checks
    ExperimentConfig config;
    double sift_fraction = 0.0;
    double qber = 0.0;
    std::uint64_t key_length = 0;
    ValidationReport validation;
    std::vector<BatchSummary> batches;
    std::string alice_key;
    std::string bob_key;
};

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

// ---------------------------------------------------------------------------
// Serialization. Field names are the wire format; objects render with sorted
// keys so equal values always produce identical bytes.
// ---------------------------------------------------------------------------

inline std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotRun: return "not_run";
    }
    throw std::invalid_argument("verdict_name: unknown verdict");
}

inline Verdict verdict_from_name(std::string_view name) {
    if (name == "pass") {
        return Verdict::Pass;
    }
    if (name == "fail") {
        return Verdict::Fail;
    }
    if (name == "not_run") {
        return Verdict::NotRun;
    }
    throw std::invalid_argument("verdict_from_name: unknown verdict");
}

inline json classical_message_to_json(const ClassicalMessage& msg) {
    if (msg.kind == ClassicalMessage::Kind::BasisSequence) {
        return json{{"type", "basis_sequence"}, {"sender", msg.sender}, {"flags", msg.flags}};
    }
    return json{{"type", "match_indices"}, {"indices", msg.indices}};
}

inline ClassicalMessage classical_message_from_json(const json& j, std::uint64_t round_count) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "basis_sequence") {
        return make_basis_sequence(j.at("sender").get<std::string>(),
                                   j.at("flags").get<std::string>());
    }
    if (type == "match_indices") {
        return make_match_indices(j.at("indices").get<std::vector<std::uint64_t>>(), round_count);
    }
    throw std::invalid_argument("classical message: unknown type \"" + type + "\"");
}

/// The two sifting messages a run exchanges in the clear: the receiver's
/// flag sequence, then the sender's list of agreeing round indices.
inline std::vector<ClassicalMessage> classical_messages_of(const ProtocolTranscript& transcript) {
    std::vector<ClassicalMessage> messages;
    const std::string bob_flags = bob_flags_of(transcript.rounds);
    messages.push_back(make_basis_sequence("bob", bob_flags));
    messages.push_back(make_match_indices(sift(alice_flags_of(transcript.rounds), bob_flags),
                                          transcript.rounds.size()));
    return messages;
}

inline json test_outcome_to_json(const TestOutcome& outcome) {
    json j;
    j["p_value"] = outcome.verdict == Verdict::NotRun ? json(nullptr) : json(outcome.p_value);
    j["verdict"] = verdict_name(outcome.verdict);
    j["degenerate"] = outcome.degenerate;
    return j;
}

inline TestOutcome test_outcome_from_json(const json& j) {
    TestOutcome outcome;
    outcome.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (!j.at("p_value").is_null()) {
        outcome.p_value = j.at("p_value").get<double>();
    }
    outcome.degenerate = j.at("degenerate").get<bool>();
    return outcome;
}

inline json validation_to_json(const ValidationReport& report) {
    json j;
    j["entropy_per_bit"] = report.entropy_ran ? json(report.entropy_per_bit) : json(nullptr);
    j["mcv_p_upper"] = report.entropy_ran ? json(report.mcv_p_upper) : json(nullptr);
    j["tests"] = json{{"binomial", test_outcome_to_json(report.binomial)},
                      {"ind", test_outcome_to_json(report.ind)},
                      {"gof", test_outcome_to_json(report.gof)},
                      {"lrs", test_outcome_to_json(report.lrs)}};
    j["thresholds"] = json{{"binomial", report.thresholds.binomial},
                           {"ind", report.thresholds.ind},
                           {"gof", report.thresholds.gof},
                           {"lrs", report.thresholds.lrs}};
    return j;
}

inline ValidationReport validation_from_json(const json& j) {
    ValidationReport report;
    report.entropy_ran = !j.at("entropy_per_bit").is_null();
    if (report.entropy_ran) {
        report.entropy_per_bit = j.at("entropy_per_bit").get<double>();
        report.mcv_p_upper = j.at("mcv_p_upper").get<double>();
    }
    const json& tests = j.at("tests");
    report.binomial = test_outcome_from_json(tests.at("binomial"));
    report.ind = test_outcome_from_json(tests.at("ind"));
    report.gof = test_outcome_from_json(tests.at("gof"));
    report.lrs = test_outcome_from_json(tests.at("lrs"));
    const json& thresholds = j.at("thresholds");
    report.thresholds.binomial = thresholds.at("binomial").get<double>();
    report.thresholds.ind = thresholds.at("ind").get<double>();
    report.thresholds.gof = thresholds.at("gof").get<double>();
    report.thresholds.lrs = thresholds.at("lrs").get<double>();
    return report;
}

// The destination path is process metadata, not an experiment parameter;
// the echo carries only the fields that determine the results.
inline json config_to_json(const ExperimentConfig& config) {
    return json{{"protocol", config.protocol},
                {"family", config.family},
                {"rounds", config.rounds},
                {"batch_size", config.batch_size},
                {"readout_epsilon", config.readout_epsilon},
                {"depolarizing_p", config.depolarizing_p},
                {"eve", config.eve},
                {"master_seed", config.master_seed}};
}

inline ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig config;
    config.protocol = j.at("protocol").get<std::string>();
    config.family = j.at("family").get<std::string>();
    config.rounds = j.at("rounds").get<std::uint64_t>();
    config.batch_size = j.at("batch_size").get<std::uint64_t>();
    config.readout_epsilon = j.at("readout_epsilon").get<double>();
    config.depolarizing_p = j.at("depolarizing_p").get<double>();
    config.eve = j.at("eve").get<bool>();
    config.master_seed = j.at("master_seed").get<std::uint64_t>();
    return config;
}

inline json transcript_to_json(const ProtocolTranscript& transcript) {
    json rounds = json::array();
    for (const RoundRecord& r : transcript.rounds) {
        rounds.push_back(json{{"index", r.index},
                              {"alice_bit", r.alice_bit ? 1 : 0},
                              {"alice_flag", r.alice_flag ? 1 : 0},
                              {"bob_flag", r.bob_flag ? 1 : 0},
                              {"bob_bit", r.bob_bit ? 1 : 0},
                              {"sifted", r.sifted}});
    }
    json messages = json::array();
    for (const ClassicalMessage& msg : classical_messages_of(transcript)) {
        messages.push_back(classical_message_to_json(msg));
    }
    return json{{"schema_version", kReportSchemaVersion},
                {"protocol", transcript.protocol},
                {"family", transcript.family},
                {"master_seed", transcript.master_seed},
                {"rounds", rounds},
                {"alice_key", transcript.alice_key},
                {"bob_key", transcript.bob_key},
                {"classical_messages", messages}};
}

inline ProtocolTranscript transcript_from_json(const json& j) {
    ProtocolTranscript transcript;
    transcript.protocol = j.at("protocol").get<std::string>();
    transcript.family = j.at("family").get<std::string>();
    transcript.master_seed = j.at("master_seed").get<std::uint64_t>();
    for (const json& rj : j.at("rounds")) {
        RoundRecord r;
        r.index = rj.at("index").get<std::uint64_t>();
        r.alice_bit = rj.at("alice_bit").get<int>() != 0;
        r.alice_flag = rj.at("alice_flag").get<int>() != 0;
        r.bob_flag = rj.at("bob_flag").get<int>() != 0;
        r.bob_bit = rj.at("bob_bit").get<int>() != 0;
        r.sifted = rj.at("sifted").get<bool>();
        transcript.rounds.push_back(r);
    }
    finish_transcript(transcript);
    if (transcript.alice_key != j.at("alice_key").get<std::string>() ||
        transcript.bob_key != j.at("bob_key").get<std::string>()) {
        throw std::invalid_argument("transcript: keys do not match the recorded rounds");
    }
    // Messages are derivable; parsing them revalidates their invariants.
    for (const json& mj : j.at("classical_messages")) {
        classical_message_from_json(mj, transcript.rounds.size());
    }
    return transcript;
}

inline json batch_to_json(const BatchSummary& batch) {
    return json{{"index", batch.index},
                {"first_round", batch.first_round},
                {"rounds", batch.rounds},
                {"sifted", batch.sifted}};
}

inline BatchSummary batch_from_json(const json& j) {
    BatchSummary batch;
    batch.index = j.at("index").get<std::uint64_t>();
    batch.first_round = j.at("first_round").get<std::uint64_t>();
    batch.rounds = j.at("rounds").get<std::uint64_t>();
    batch.sifted = j.at("sifted").get<std::uint64_t>();
    return batch;
}

inline json report_to_json(const ExperimentReport& report) {
    json batches = json::array();
    for (const BatchSummary& batch : report.batches) {
        batches.push_back(batch_to_json(batch));
    }
    json results{{"sift_fraction", report.sift_fraction},
                 {"qber", report.qber},
                 {"key_length", report.key_length},
                 {"alice_key", report.alice_key},
                 {"bob_key", report.bob_key},
                 {"validation", validation_to_json(report.validation)},
                 {"batches", batches}};
    return json{{"schema_version", report.schema_version},
                {"generated_at", report.generated_at},
                {"config", config_to_json(report.config)},
                {"results", results}};
}

inline ExperimentReport report_from_json(const json& j) {
    ExperimentReport report;
    report.schema_version = j.at("schema_version").get<int>();
    report.generated_at = j.at("generated_at").get<std::string>();
    report.config = config_from_json(j.at("config"));
    const json& results = j.at("results");
    report.sift_fraction = results.at("sift_fraction").get<double>();
    report.qber = results.at("qber").get<double>();
    report.key_length = results.at("key_length").get<std::uint64_t>();
    report.validation = validation_from_json(results.at("validation"));
    for (const json& bj : results.at("batches")) {
        report.batches.push_back(batch_from_json(bj));
    }
    report.alice_key = results.at("alice_key").get<std::string>();
    report.bob_key = results.at("bob_key").get<std::string>();
    return report;
}

inline std::string render_report(const ExperimentReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

inline ExperimentReport parse_report(std::string_view text) {
    return report_from_json(json::parse(text));
}

} // namespace qkdlab

#endif // QKDLAB_REPORT_HPP
