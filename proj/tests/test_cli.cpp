// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the lognb binary: exit codes, determinism, and the
// train/classify/eval vs run equivalence. The binary path comes in through
// LOGNB_CLI_PATH.

#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "lognb/classifier.hpp"
#include "lognb/synth.hpp"
#include "support/subprocess.hpp"

using namespace lognb;
using namespace lognb_tests;

namespace {

// One small deterministic corpus per test binary run.
struct Corpus {
    TempDir dir;
    std::string log_path;

    explicit Corpus(std::uint64_t count = 8000, double error_rate = 0.01,
                    std::uint64_t seed = 11) {
        log_path = dir.file("corpus.log");
        GeneratorSpec spec;
        spec.count = count;
        spec.error_rate = error_rate;
        spec.seed = seed;
        generate_files(spec, log_path, log_path + ".truth");
    }
};

std::size_t data_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++n;
    return n;
}

}  // namespace

TEST_CASE("cli: help and version exit 0, missing subcommand exits 2") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("--version") == 0);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("cli: gen writes corpus and sidecar deterministically") {
    TempDir dir;
    std::string a = dir.file("a.log");
    std::string b = dir.file("b.log");
    CHECK(run_cli("gen --out " + a + " --count 500 --seed 3") == 0);
    CHECK(run_cli("gen --out " + b + " --count 500 --seed 3") == 0);
    CHECK(read_file(a) == read_file(b));
    CHECK(read_file(a + ".truth") == read_file(b + ".truth"));
    CHECK(data_lines(read_file(a)) == 500);
    CHECK(run_cli("gen --out " + a + " --count 500 --seed 4") == 0);
    CHECK(read_file(a) != read_file(b));
}

TEST_CASE("cli: gen rejects invalid spec with exit 2") {
    TempDir dir;
    std::string err = dir.file("err.txt");
    CHECK(run_cli("gen --out " + dir.file("x.log") + " --count 10 --error-rate 2.0",
                  "", err) == 2);
    CHECK(read_file(err).find("error_rate") != std::string::npos);
}

TEST_CASE("cli: run produces a report and exits 0") {
    Corpus corpus;
    std::string out = corpus.dir.file("report.txt");
    std::string json = corpus.dir.file("report.json");
    int code = run_cli("run --input " + corpus.log_path +
                           " --features 200 --prealloc-frac 0.5 --train-size 2000"
                           " --out " + out + " --json-out " + json,
                       corpus.dir.file("stdout.txt"));
    CHECK(code == 0);
    std::string report = read_file(out);
    CHECK(report.find("len(documents) = 8000") != std::string::npos);
    CHECK(report.find("len(train_set) = 2000") != std::string::npos);
    CHECK(report.find("len(test_set) = 6000") != std::string::npos);
    CHECK(report.find("Most Informative Features") != std::string::npos);
    CHECK(read_file(corpus.dir.file("stdout.txt")) == report);
    CHECK(read_file(json).find("\"documents\": 8000") != std::string::npos);
}

TEST_CASE("cli: run exit codes for bad configuration and I/O") {
    Corpus corpus(300);
    std::string err = corpus.dir.file("err.txt");

    // n out of range
    CHECK(run_cli("run --input " + corpus.log_path + " --train-size 300", "", err) == 2);
    CHECK(read_file(err).find("train size") != std::string::npos);
    CHECK(run_cli("run --input " + corpus.log_path + " --train-size 0") == 2);

    // p and alpha validation
    CHECK(run_cli("run --input " + corpus.log_path +
                  " --train-size 100 --features 0") == 2);
    CHECK(run_cli("run --input " + corpus.log_path +
                  " --train-size 100 --alpha 0") == 2);
    CHECK(run_cli("run --input " + corpus.log_path +
                  " --train-size 100 --prealloc-frac 1.5") == 2);

    // missing input file
    CHECK(run_cli("run --input " + corpus.dir.file("nope.log") +
                  " --train-size 10", "", err) == 3);
    CHECK(read_file(err).find("cannot open") != std::string::npos);

    // missing stop-word file
    CHECK(run_cli("run --input " + corpus.log_path +
                  " --train-size 100 --stop-words " + corpus.dir.file("nope.txt")) == 3);
}

TEST_CASE("cli: single-class training slice exits 4") {
    Corpus corpus(400, /*error_rate=*/0.0, /*seed=*/5);
    std::string err = corpus.dir.file("err.txt");
    int code = run_cli("run --input " + corpus.log_path + " --train-size 200", "", err);
    CHECK(code == 4);
    CHECK(read_file(err).find("degenerate") != std::string::npos);
}

TEST_CASE("cli: run is deterministic byte for byte") {
    Corpus corpus;
    std::string flags = " --features 150 --prealloc-frac 0.5 --train-size 2000";
    std::string m1 = corpus.dir.file("m1.json"), m2 = corpus.dir.file("m2.json");
    std::string r1 = corpus.dir.file("r1.txt"), r2 = corpus.dir.file("r2.txt");
    REQUIRE(run_cli("run --input " + corpus.log_path + flags + " --model " + m1 +
                    " --out " + r1) == 0);
    REQUIRE(run_cli("run --input " + corpus.log_path + flags + " --model " + m2 +
                    " --out " + r2) == 0);
    CHECK(read_file(m1) == read_file(m2));
    CHECK(read_file(r1) == read_file(r2));
}

TEST_CASE("cli: train + eval reproduces the run report byte for byte") {
    Corpus corpus;
    std::string flags = " --features 150 --prealloc-frac 0.5 --train-size 2000";
    std::string run_model = corpus.dir.file("run_model.json");
    std::string run_report = corpus.dir.file("run_report.txt");
    REQUIRE(run_cli("run --input " + corpus.log_path + flags + " --model " +
                    run_model + " --out " + run_report) == 0);

    std::string train_model = corpus.dir.file("train_model.json");
    REQUIRE(run_cli("train --input " + corpus.log_path + flags + " --model " +
                    train_model) == 0);
    CHECK(read_file(run_model) == read_file(train_model));

    std::string eval_report = corpus.dir.file("eval_report.txt");
    REQUIRE(run_cli("eval --model " + train_model + " --input " + corpus.log_path +
                    " --train-size 2000 --out " + eval_report) == 0);
    CHECK(read_file(run_report) == read_file(eval_report));
}

TEST_CASE("cli: classify emits one line per event") {
    Corpus corpus(1200);
    std::string model = corpus.dir.file("model.json");
    REQUIRE(run_cli("train --input " + corpus.log_path +
                    " --features 100 --train-size 600 --model " + model) == 0);
    std::string preds = corpus.dir.file("preds.tsv");
    REQUIRE(run_cli("classify --model " + model + " --input " + corpus.log_path +
                    " --out " + preds) == 0);
    std::string text = read_file(preds);
    CHECK(data_lines(text) == 1200);
    CHECK(text.find("# file\tsource_line\tpredicted\tlog_score_error\t"
                    "log_score_non_error\n") == 0);
    CHECK(text.find("\terror\t") != std::string::npos);
    CHECK(text.find("\tnon_error\t") != std::string::npos);
}

TEST_CASE("cli: inspect prints unit ratios for a symmetric model") {
    TempDir dir;
    Vocabulary vocab;
    vocab.tokens = {"w"};
    vocab.requested_p = 1;
    std::vector<std::pair<FeatureVector, ClassLabel>> examples = {
        {{true}, ClassLabel::error},
        {{false}, ClassLabel::error},
        {{true}, ClassLabel::non_error},
        {{false}, ClassLabel::non_error},
    };
    std::string model_path = dir.file("uniform.json");
    save_model_file(train(examples, vocab, 0.5), model_path);

    std::string out = dir.file("inspect.txt");
    REQUIRE(run_cli("inspect --model " + model_path + " --top 5", out) == 0);
    std::string text = read_file(out);
    CHECK(text.find("Most Informative Features") != std::string::npos);
    CHECK(text.find("1.0 : 1.0") != std::string::npos);
}

TEST_CASE("cli: model with a mismatched format_version is rejected") {
    Corpus corpus(600);
    std::string model = corpus.dir.file("model.json");
    REQUIRE(run_cli("train --input " + corpus.log_path +
                    " --features 50 --train-size 300 --model " + model) == 0);
    std::string doc = read_file(model);
    auto pos = doc.find("\"format_version\": 1");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, std::string("\"format_version\": 1").size(),
                "\"format_version\": 99");
    write_file(model, doc);

    std::string err = corpus.dir.file("err.txt");
    CHECK(run_cli("classify --model " + model + " --input " + corpus.log_path, "",
                  err) == 2);
    CHECK(read_file(err).find("format_version") != std::string::npos);
    CHECK(run_cli("eval --model " + model + " --input " + corpus.log_path) == 2);
    CHECK(run_cli("inspect --model " + model) == 2);
}

TEST_CASE("cli: multiple --input files are processed in order") {
    TempDir dir;
    std::string a = dir.file("a.log"), b = dir.file("b.log");
    GeneratorSpec spec;
    spec.count = 400;
    spec.seed = 21;
    generate_files(spec, a, a + ".truth");
    spec.seed = 22;
    generate_files(spec, b, b + ".truth");

    std::string out = dir.file("report.txt");
    REQUIRE(run_cli("run --input " + a + " " + b +
                    " --features 80 --train-size 300 --out " + out) == 0);
    CHECK(read_file(out).find("len(documents) = 800") != std::string::npos);

    // Same corpus, same split, via the repeated-flag spelling.
    std::string out2 = dir.file("report2.txt");
    REQUIRE(run_cli("run --input " + a + " --input " + b +
                    " --features 80 --train-size 300 --out " + out2) == 0);
    CHECK(read_file(out) == read_file(out2));
}
