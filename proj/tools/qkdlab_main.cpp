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
//
// qkdlab command line: run simulated key-distribution experiments, screen
// key files for randomness, and compare saved experiment reports.
//
// Exit codes: 0 success, 1 a validation verdict failed, 2 usage/config/IO
// error.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qkdlab/qkdlab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;

void print_validation(const qkdlab::ValidationReport& v) {
    using qkdlab::Verdict;
    const auto row = [](const char* name, const qkdlab::TestOutcome& outcome, double threshold) {
        if (outcome.verdict == Verdict::NotRun) {
            std::printf("  %-10s not run (sample too short)\n", name);
            return;
        }
        std::printf("  %-10s p = %-12.6g threshold = %-10.6g %s%s\n", name, outcome.p_value,
                    threshold, outcome.verdict == Verdict::Pass ? "pass" : "FAIL",
                    outcome.degenerate ? " (degenerate input)" : "");
    };
    if (v.entropy_ran) {
        std::printf("  %-10s %.6g per bit (modal-symbol bound %.6g)\n", "entropy",
                    v.entropy_per_bit, v.mcv_p_upper);
    } else {
        std::printf("  %-10s not run (sample too short)\n", "entropy");
    }
    row("binomial", v.binomial, v.thresholds.binomial);
    row("ind", v.ind, v.thresholds.ind);
    row("gof", v.gof, v.thresholds.gof);
    row("lrs", v.lrs, v.thresholds.lrs);
}

int cmd_run(const qkdlab::ExperimentConfig& config, const std::string& transcript_path) {
    std::optional<std::filesystem::path> transcript;
    if (!transcript_path.empty()) {
        transcript = transcript_path;
    }
    const qkdlab::ExperimentReport report = qkdlab::run_experiment(config, {}, transcript);
    std::printf("protocol      %s (%s family)\n", config.protocol.c_str(), config.family.c_str());
    std::printf("rounds        %llu in %zu batches of <= %llu\n",
                static_cast<unsigned long long>(config.rounds), report.batches.size(),
                static_cast<unsigned long long>(config.batch_size));
    std::printf("sift fraction %.6g\n", report.sift_fraction);
    std::printf("key length    %llu\n", static_cast<unsigned long long>(report.key_length));
    std::printf("error rate    %.6g\n", report.qber);
    std::printf("validation of the sifted key:\n");
    print_validation(report.validation);
    std::printf("report written to %s\n", config.output_path.c_str());
    return report.validation.all_pass() ? kExitOk : kExitVerdictFail;
}

int cmd_validate(const std::string& in_path, const std::string& format_name,
                 double binomial_threshold, double iid_threshold) {
    qkdlab::Thresholds thresholds;
    thresholds.binomial = binomial_threshold;
    thresholds.ind = iid_threshold;
    thresholds.gof = iid_threshold;
    thresholds.lrs = iid_threshold;
    const qkdlab::ValidationReport report =
        qkdlab::validate_file(in_path, qkdlab::bit_file_format(format_name), thresholds);
    std::printf("validation of %s:\n", in_path.c_str());
    print_validation(report);
    return report.all_pass() ? kExitOk : kExitVerdictFail;
}

int cmd_compare(const std::vector<std::string>& paths, const std::string& json_out) {
    std::vector<qkdlab::ExperimentReport> reports;
    reports.reserve(paths.size());
    for (const std::string& path : paths) {
        reports.push_back(qkdlab::load_report(path));
    }
    const std::string table = qkdlab::comparison_table(reports);
    const qkdlab::json aggregate = qkdlab::comparison_json(reports);
    std::fputs(table.c_str(), stdout);
    if (json_out.empty()) {
        std::printf("%s\n", aggregate.dump().c_str());
    } else {
        qkdlab::write_text_file(json_out, aggregate.dump(2) + "\n");
        std::printf("aggregate written to %s\n", json_out.c_str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulated quantum key distribution laboratory"};
    app.require_subcommand(1);

    qkdlab::ExperimentConfig config;
    std::string transcript_path;
    CLI::App* run = app.add_subcommand("run", "Run a key-distribution experiment");
    run->add_option("--protocol", config.protocol, "Protocol: bb84 or e91")->required();
    run->add_option("--family", config.family, "Basis family: hadamard or sx")->required();
    run->add_option("--rounds", config.rounds, "Number of protocol rounds")->required();
    run->add_option("--batch-size", config.batch_size, "Rounds per job summary (default 128)");
    run->add_option("--readout-eps", config.readout_epsilon,
                    "Per-measured-bit readout flip probability");
    run->add_option("--depol-p", config.depolarizing_p,
                    "Per-transmitted-qubit depolarizing probability");
    run->add_flag("--eve", config.eve, "Enable the intercept-resend adversary (bb84 only)");
    run->add_option("--seed", config.master_seed, "Master seed")->required();
    run->add_option("--out", config.output_path, "Report output path")->required();
    run->add_option("--transcript", transcript_path, "Also write the full round transcript here");

    std::string in_path;
    std::string format_name = "ascii";
    double binomial_threshold = qkdlab::Thresholds{}.binomial;
    double iid_threshold = qkdlab::Thresholds{}.ind;
    CLI::App* validate = app.add_subcommand("validate", "Screen a key file for randomness");
    validate->add_option("--in", in_path, "Bit file to screen")->required();
    validate->add_option("--format", format_name, "File format: ascii or binary")
        ->check(CLI::IsMember({"ascii", "binary"}));
    validate->add_option("--binomial-threshold", binomial_threshold,
                         "p-value cutoff for the balance test");
    validate->add_option("--iid-threshold", iid_threshold,
                         "p-value cutoff for the ind/gof/lrs tests");

    std::vector<std::string> report_paths;
    std::string json_out;
    CLI::App* compare = app.add_subcommand("compare", "Tabulate saved reports side by side");
    compare->add_option("reports", report_paths, "Report files (two or more)");
    compare->add_option("--json", json_out, "Write the machine-readable aggregate here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(config, transcript_path);
        }
        if (validate->parsed()) {
            return cmd_validate(in_path, format_name, binomial_threshold, iid_threshold);
        }
        return cmd_compare(report_paths, json_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
