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

#include "qkdlab/experiment.hpp"

#include <catch2/catch.hpp>

#include <filesystem>
#include <sstream>

using namespace qkdlab;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "qkdlab_report_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

ExperimentConfig small_config() {
    ExperimentConfig config;
    config.protocol = "bb84";
    config.family = "sx";
    config.rounds = 1000;
    config.master_seed = 5;
    config.output_path = (test_dir() / "small.json").string();
    return config;
}

std::string strip_generated_at(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.find("\"generated_at\"") == std::string::npos) {
            out += line;
            out += '\n';
        }
    }
    return out;
}

} // namespace

TEST_CASE("experiment config validation") {
    ExperimentConfig config = small_config();
    REQUIRE_NOTHROW(check_experiment_config(config));

    SECTION("protocol") {
        config.protocol = "b92";
        REQUIRE_THROWS_AS(check_experiment_config(config), std::invalid_argument);
    }
    SECTION("family") {
        config.family = "ry";
        REQUIRE_THROWS_AS(check_experiment_config(config), std::invalid_argument);
    }
    SECTION("rounds") {
        config.rounds = 0;
        REQUIRE_THROWS_AS(check_experiment_config(config), std::invalid_argument);
    }
    SECTION("batch size") {
        config.batch_size = 0;
        REQUIRE_THROWS_AS(check_experiment_config(config), std::invalid_argument);
    }
    SECTION("adversary is a transmission-channel concept") {
        config.protocol = "e91";
        config.eve = true;
        REQUIRE_THROWS_AS(check_experiment_config(config), std::invalid_argument);
    }
    SECTION("noise ranges") {
        config.readout_epsilon = 1.5;
        REQUIRE_THROWS_AS(check_experiment_config(config), std::invalid_argument);
    }
}

TEST_CASE("report assembly tracks the transcript") {
    const ExperimentConfig config = small_config();
    const ProtocolTranscript transcript = run_protocol(config);
    const ExperimentReport report =
        build_experiment_report(config, transcript, "2026-01-01T00:00:00Z");

    REQUIRE(report.key_length == transcript.alice_key.size());
    REQUIRE(report.sift_fraction ==
            Approx(static_cast<double>(report.key_length) / 1000.0));
    REQUIRE(report.qber == 0.0);
    REQUIRE(report.alice_key == transcript.alice_key);

    std::uint64_t batch_rounds = 0, batch_sifted = 0;
    for (const BatchSummary& batch : report.batches) {
        batch_rounds += batch.rounds;
        batch_sifted += batch.sifted;
    }
    REQUIRE(report.batches.size() == 8); // ceil(1000 / 128)
    REQUIRE(report.batches.front().rounds == 128);
    REQUIRE(report.batches.back().rounds == 1000 - 7 * 128);
    REQUIRE(batch_rounds == 1000);
    REQUIRE(batch_sifted == report.key_length);
}

TEST_CASE("batch size only regroups job summaries") {
    ExperimentConfig narrow = small_config();
    narrow.batch_size = 1;
    ExperimentConfig wide = small_config();
    wide.batch_size = 100000;

    const ExperimentReport a =
        build_experiment_report(narrow, run_protocol(narrow), "t");
    const ExperimentReport b = build_experiment_report(wide, run_protocol(wide), "t");

    REQUIRE(a.alice_key == b.alice_key);
    REQUIRE(a.bob_key == b.bob_key);
    REQUIRE(a.qber == b.qber);
    REQUIRE(validation_to_json(a.validation).dump() == validation_to_json(b.validation).dump());
    REQUIRE(a.batches.size() == 1000);
    REQUIRE(b.batches.size() == 1);
}

TEST_CASE("a run with no sifted bits still reports cleanly") {
    ExperimentConfig config = small_config();
    config.rounds = 1;
    // Find a seed whose single round mismatches its flags.
    for (std::uint64_t seed = 0;; ++seed) {
        config.master_seed = seed;
        if (run_protocol(config).alice_key.empty()) {
            break;
        }
    }
    const ExperimentReport report =
        build_experiment_report(config, run_protocol(config), "t");
    REQUIRE(report.key_length == 0);
    REQUIRE(report.qber == 0.0);
    REQUIRE_FALSE(report.validation.entropy_ran);
    REQUIRE(report.validation.binomial.verdict == Verdict::NotRun);
    REQUIRE(report.validation.all_pass());
    const std::string rendered = render_report(report);
    REQUIRE(render_report(parse_report(rendered)) == rendered);
}

TEST_CASE("reports round-trip byte for byte") {
    const ExperimentConfig config = small_config();
    const ExperimentReport report =
        build_experiment_report(config, run_protocol(config), utc_timestamp());
    const std::string first = render_report(report);
    const std::string second = render_report(parse_report(first));
    REQUIRE(first == second);
}

TEST_CASE("transcripts round-trip and reject tampered keys") {
    ExperimentConfig config = small_config();
    config.rounds = 64;
    const ProtocolTranscript transcript = run_protocol(config);
    const json serialized = transcript_to_json(transcript);

    const ProtocolTranscript restored = transcript_from_json(serialized);
    REQUIRE(transcript_to_json(restored).dump(2) == serialized.dump(2));
    REQUIRE(restored.alice_key == transcript.alice_key);

    json tampered = serialized;
    std::string key = tampered.at("alice_key").get<std::string>();
    key[0] = key[0] == '0' ? '1' : '0';
    tampered["alice_key"] = key;
    REQUIRE_THROWS_AS(transcript_from_json(tampered), std::invalid_argument);
}

TEST_CASE("classical messages serialize canonically") {
    ExperimentConfig config = small_config();
    config.rounds = 16;
    const ProtocolTranscript transcript = run_protocol(config);
    const auto messages = classical_messages_of(transcript);

    REQUIRE(messages.size() == 2);
    REQUIRE(messages[0].kind == ClassicalMessage::Kind::BasisSequence);
    REQUIRE(messages[0].sender == "bob");
    REQUIRE(messages[0].flags.size() == 16);
    REQUIRE(messages[1].kind == ClassicalMessage::Kind::MatchIndices);
    REQUIRE(messages[1].indices ==
            sift(alice_flags_of(transcript.rounds), bob_flags_of(transcript.rounds)));

    for (const ClassicalMessage& msg : messages) {
        const json j = classical_message_to_json(msg);
        const ClassicalMessage restored = classical_message_from_json(j, 16);
        REQUIRE(classical_message_to_json(restored).dump() == j.dump());
    }
    REQUIRE_THROWS_AS(classical_message_from_json(json{{"type", "telegram"}}, 16),
                      std::invalid_argument);
}

TEST_CASE("run_experiment persists the report and both keys") {
    ExperimentConfig config = small_config();
    config.output_path = (test_dir() / "persisted.json").string();
    const fs::path transcript_path = test_dir() / "persisted.transcript.json";
    const ExperimentReport report = run_experiment(config, {}, transcript_path);

    const ExperimentReport loaded = load_report(config.output_path);
    REQUIRE(render_report(loaded) == render_report(report));

    const std::string alice_bits =
        read_bits_file(config.output_path + ".alice.bits", BitFileFormat::Ascii);
    REQUIRE(alice_bits == report.alice_key);

    const ProtocolTranscript transcript =
        transcript_from_json(json::parse(read_file_raw(transcript_path)));
    REQUIRE(transcript.alice_key == report.alice_key);

    // The persisted key screens identically through the file path.
    const ValidationReport revalidated =
        validate_file(config.output_path + ".alice.bits", BitFileFormat::Ascii);
    REQUIRE(revalidated.binomial.p_value == report.validation.binomial.p_value);
}

TEST_CASE("identically seeded runs differ only in the timestamp header") {
    ExperimentConfig config = small_config();
    config.readout_epsilon = 0.02;
    config.output_path = (test_dir() / "det_a.json").string();
    run_experiment(config);
    const std::string a = read_file_raw(config.output_path);
    config.output_path = (test_dir() / "det_b.json").string();
    run_experiment(config);
    const std::string b = read_file_raw(config.output_path);
    REQUIRE(strip_generated_at(a) == strip_generated_at(b));
}

TEST_CASE("bit file decoding") {
    REQUIRE(decode_ascii_bits("0101\n10\r\n") == "010110");
    REQUIRE_THROWS_AS(decode_ascii_bits("01 10"), std::invalid_argument);
    REQUIRE(decode_binary_bits(std::string{static_cast<char>(0xA5)}) == "10100101");
    REQUIRE(decode_binary_bits(std::string{static_cast<char>(0x01), static_cast<char>(0x80)}) ==
            "0000000110000000");

    const fs::path empty_path = test_dir() / "empty.bits";
    write_text_file(empty_path, "");
    REQUIRE_THROWS_AS(validate_file(empty_path, BitFileFormat::Ascii), std::invalid_argument);
    REQUIRE_THROWS_AS(read_bits_file(test_dir() / "missing.bits", BitFileFormat::Ascii),
                      std::runtime_error);

    const fs::path short_path = test_dir() / "short.bits";
    write_text_file(short_path, "0101010\n");
    const ValidationReport report = validate_file(short_path, BitFileFormat::Ascii);
    REQUIRE(report.ind.verdict == Verdict::NotRun);
    REQUIRE(report.binomial.verdict == Verdict::Pass);
}

TEST_CASE("comparison requires two compatible reports") {
    ExperimentConfig config = small_config();
    config.output_path = (test_dir() / "cmp_a.json").string();
    const ExperimentReport a = run_experiment(config);

    config.protocol = "e91";
    config.eve = false;
    config.readout_epsilon = 0.05;
    config.output_path = (test_dir() / "cmp_b.json").string();
    const ExperimentReport b = run_experiment(config);

    REQUIRE_THROWS_AS(comparison_table({a}), std::invalid_argument);

    ExperimentReport mismatched = b;
    mismatched.schema_version = 2;
    REQUIRE_THROWS_AS(comparison_table({a, mismatched}), std::invalid_argument);

    const std::string table = comparison_table({a, b});
    REQUIRE(table.find("bb84/sx") != std::string::npos);
    REQUIRE(table.find("e91/sx") != std::string::npos);

    const json aggregate = comparison_json({a, b});
    REQUIRE(aggregate.at("rows").size() == 2);
    REQUIRE(aggregate.at("rows")[0].at("variant") == "bb84/sx");
    REQUIRE(aggregate.at("rows")[0].at("error_rate").get<double>() == 0.0);
    REQUIRE(aggregate.at("rows")[1].at("error_rate").get<double>() > 0.05);
}
