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

#ifndef QKDLAB_EXPERIMENT_HPP
#define QKDLAB_EXPERIMENT_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "qkdlab/bb84.hpp"
#include "qkdlab/bitio.hpp"
#include "qkdlab/e91.hpp"
#include "qkdlab/report.hpp"

namespace qkdlab {

/// Dispatch a configured run to the right protocol engine.
inline ProtocolTranscript run_protocol(const ExperimentConfig& config) {
    check_experiment_config(config);
    const BasisFamily& family = basis_family(config.family);
    const NoiseConfig noise{config.readout_epsilon, config.depolarizing_p};
    if (config.protocol == "bb84") {
        const EveConfig eve{config.eve, EveStrategy::InterceptResend};
        return bb84_run(config.rounds, family, noise, eve, config.master_seed);
    }
    return e91_run(config.rounds, family, noise, config.master_seed);
}

inline std::vector<BatchSummary> batch_summaries(const ProtocolTranscript& transcript,
                                                 std::uint64_t batch_size) {
    std::vector<BatchSummary> batches;
    const std::uint64_t n = transcript.rounds.size();
    for (std::uint64_t first = 0; first < n; first += batch_size) {
        BatchSummary batch;
        batch.index = first / batch_size;
        batch.first_round = first;
        batch.rounds = std::min(batch_size, n - first);
        for (std::uint64_t i = first; i < first + batch.rounds; ++i) {
            batch.sifted += transcript.rounds[i].sifted ? 1 : 0;
        }
        batches.push_back(batch);
    }
    return batches;
}

/// Assemble the report for a finished transcript. Pure; all file output
/// lives in run_experiment.
inline ExperimentReport build_experiment_report(const ExperimentConfig& config,
                                                const ProtocolTranscript& transcript,
                                                std::string generated_at,
                                                const Thresholds& thresholds = {}) {
    ExperimentReport report;
    report.generated_at = std::move(generated_at);
    report.config = config;
    report.key_length = transcript.alice_key.size();
    report.sift_fraction =
        static_cast<double>(report.key_length) / static_cast<double>(config.rounds);
    report.qber =
        transcript.alice_key.empty() ? 0.0 : qber(transcript.alice_key, transcript.bob_key);
    if (!transcript.alice_key.empty()) {
        report.validation = validate(
            BitSample{transcript.alice_key, config.protocol + "/" + config.family}, thresholds);
    } else {
        report.validation.thresholds = thresholds;
    }
    report.batches = batch_summaries(transcript, config.batch_size);
    report.alice_key = transcript.alice_key;
    report.bob_key = transcript.bob_key;
    return report;
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

/// Run the configured experiment and persist its outputs: the report at
/// config.output_path, both sifted keys next to it in the text bit format
/// (<output_path>.alice.bits / .bob.bits), and optionally the full
/// transcript. Fully deterministic per master_seed; only the generated_at
/// header differs between identically configured runs.
inline ExperimentReport run_experiment(const ExperimentConfig& config,
                                       const Thresholds& thresholds = {},
                                       const std::optional<std::filesystem::path>&
                                           transcript_path = std::nullopt) {
    check_experiment_config(config);
    if (config.output_path.empty()) {
        throw std::invalid_argument("config: output_path must not be empty");
    }
    const ProtocolTranscript transcript = run_protocol(config);
    const ExperimentReport report =
        build_experiment_report(config, transcript, utc_timestamp(), thresholds);
    write_text_file(config.output_path, render_report(report));
    write_bits_ascii(config.output_path + ".alice.bits", transcript.alice_key);
    write_bits_ascii(config.output_path + ".bob.bits", transcript.bob_key);
    if (transcript_path) {
        write_text_file(*transcript_path, transcript_to_json(transcript).dump(2) + "\n");
    }
    return report;
}

/// Randomness screen of an externally produced key file.
inline ValidationReport validate_file(const std::filesystem::path& path, BitFileFormat format,
                                      const Thresholds& thresholds = {}) {
    const std::string bits = read_bits_file(path, format);
    if (bits.empty()) {
        throw std::invalid_argument("validate_file: no bits decoded from " + path.string());
    }
    return validate(BitSample{bits, path.filename().string()}, thresholds);
}

inline ExperimentReport load_report(const std::filesystem::path& path) {
    return parse_report(read_file_raw(path));
}

namespace detail {

inline std::string fmt6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", value);
    return buffer;
}

inline std::string outcome_cell(const TestOutcome& outcome) {
    if (outcome.verdict == Verdict::NotRun) {
        return "-";
    }
    return fmt6(outcome.p_value);
}

} // namespace detail

inline void check_comparable(const std::vector<ExperimentReport>& reports) {
    if (reports.size() < 2) {
        throw std::invalid_argument("compare: need at least two reports");
    }
    for (const ExperimentReport& report : reports) {
        if (report.schema_version != reports.front().schema_version) {
            throw std::invalid_argument("compare: schema_version mismatch across inputs");
        }
    }
}

/// One row per report: variant label, the five statistics and the error
/// rate, mirroring the shape of the validation summaries.
inline json comparison_json(const std::vector<ExperimentReport>& reports) {
    check_comparable(reports);
    json rows = json::array();
    for (const ExperimentReport& report : reports) {
        const ValidationReport& v = report.validation;
        rows.push_back(json{
            {"variant", report.config.protocol + "/" + report.config.family},
            {"entropy", v.entropy_ran ? json(v.entropy_per_bit) : json(nullptr)},
            {"binomial_p",
             v.binomial.verdict == Verdict::NotRun ? json(nullptr) : json(v.binomial.p_value)},
            {"ind_p", v.ind.verdict == Verdict::NotRun ? json(nullptr) : json(v.ind.p_value)},
            {"gof_p", v.gof.verdict == Verdict::NotRun ? json(nullptr) : json(v.gof.p_value)},
            {"lrs_p", v.lrs.verdict == Verdict::NotRun ? json(nullptr) : json(v.lrs.p_value)},
            {"error_rate", report.qber}});
    }
    return json{{"schema_version", reports.front().schema_version}, {"rows", rows}};
}

inline std::string comparison_table(const std::vector<ExperimentReport>& reports) {
    check_comparable(reports);
    std::string table;
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %-12s %-12s %-12s %-12s %-12s %-12s\n", "variant",
                  "entropy", "binomial_p", "ind_p", "gof_p", "lrs_p", "error_rate");
    table += line;
    for (const ExperimentReport& report : reports) {
        const ValidationReport& v = report.validation;
        const std::string label = report.config.protocol + "/" + report.config.family;
        std::snprintf(line, sizeof line, "%-16s %-12s %-12s %-12s %-12s %-12s %-12s\n",
                      label.c_str(),
                      (v.entropy_ran ? detail::fmt6(v.entropy_per_bit) : std::string("-")).c_str(),
                      detail::outcome_cell(v.binomial).c_str(), detail::outcome_cell(v.ind).c_str(),
                      detail::outcome_cell(v.gof).c_str(), detail::outcome_cell(v.lrs).c_str(),
                      detail::fmt6(report.qber).c_str());
        table += line;
    }
    return table;
}

} // namespace qkdlab

#endif // QKDLAB_EXPERIMENT_HPP
