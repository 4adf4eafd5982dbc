// SPDX-License-Identifier: Apache-2.0
//
// lognb -- classify rare error events in semi-structured machine logs.
//
// Subcommands mirror the pipeline: `gen` writes a seeded synthetic corpus,
// `run` executes the whole flow (parse, label, tokenize, select features,
// time-consecutive split, train, classify, report), and train / classify /
// eval / inspect expose the individual stages around a saved model file.
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 degenerate
// training set (only one class in the training slice).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lognb/classifier.hpp"
#include "lognb/errors.hpp"
#include "lognb/evaluate.hpp"
#include "lognb/features.hpp"
#include "lognb/parser.hpp"
#include "lognb/synth.hpp"
#include "lognb/tokenizer.hpp"

namespace {

using namespace lognb;

struct PipelineOptions {
    std::vector<std::string> inputs;
    std::size_t features = 500;
    double prealloc_frac = 0.5;
    std::uint64_t train_size = 0;
    double alpha = 0.5;
    std::string stop_words_file;
    std::size_t top = 5;
    std::string out_file;
    std::string json_out_file;
    std::string model_file;
    bool stats = false;
};

struct GenOptions {
    std::string out_file;
    std::string truth_file;
    std::uint64_t count = 0;
    double error_rate = 0.01;
    std::uint64_t seed = 1;
    double format_mix = 0.25;
};

TokenizerConfig make_tokenizer(const PipelineOptions& opts) {
    TokenizerConfig tok;
    if (!opts.stop_words_file.empty())
        tok.stop_words = load_stop_words(opts.stop_words_file);
    return tok;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write file: " + path);
    out << content;
    out.flush();
    if (!out) throw io_error("write failure in file: " + path);
}

struct ScanResult {
    FrequencyTable table;
    std::uint64_t documents = 0;
    std::uint64_t errors = 0;
    ParseStats stats;
};

// First pass: document frequencies, document and error totals.
ScanResult scan_corpus(const std::vector<std::string>& inputs,
                       const TokenizerConfig& tok) {
    ScanResult out;
    FrequencyCounter counter;
    for (const std::string& path : inputs) {
        out.stats += parse_file(path, [&](LogEvent&& ev) {
            LabeledEvent labeled = label_event(std::move(ev));
            ++out.documents;
            if (labeled.is_error) ++out.errors;
            counter.add(tokenize(labeled.event.content, tok), labeled.label());
        });
    }
    if (out.documents == 0)
        throw config_error("no events parsed from the input files");
    out.table = counter.take();
    return out;
}

// Second pass: labeled events in corpus order with a global index.
void stream_labeled(
    const std::vector<std::string>& inputs,
    const std::function<void(std::size_t, const std::string&, LabeledEvent&&)>& fn) {
    std::size_t index = 0;
    for (const std::string& path : inputs) {
        parse_file(path, [&](LogEvent&& ev) {
            fn(index++, path, label_event(std::move(ev)));
        });
    }
}

void maybe_print_stats(const PipelineOptions& opts, const ParseStats& stats) {
    if (opts.stats) std::cerr << render_stats(stats);
}

void emit_report(const PipelineOptions& opts, const MetricsReport& report) {
    std::string text = render_report(report);
    std::cout << text;
    if (!opts.out_file.empty()) write_text_file(opts.out_file, text);
    if (!opts.json_out_file.empty())
        write_text_file(opts.json_out_file, render_report_json(report));
}

int cmd_run(const PipelineOptions& opts) {
    TokenizerConfig tok = make_tokenizer(opts);
    ScanResult scan = scan_corpus(opts.inputs, tok);
    maybe_print_stats(opts, scan.stats);
    if (opts.train_size < 1 || opts.train_size >= scan.documents) {
        throw config_error("train size must satisfy 1 <= n < " +
                           std::to_string(scan.documents) + ", got " +
                           std::to_string(opts.train_size));
    }
    Vocabulary vocab = select_vocabulary(scan.table, opts.features, opts.prealloc_frac);

    Trainer trainer(vocab, opts.alpha, tok);
    std::optional<NBModel> model;
    ConfusionCounter confusion;
    stream_labeled(opts.inputs, [&](std::size_t index, const std::string&,
                                    LabeledEvent&& labeled) {
        FeatureVector fv = vectorize(tokenize(labeled.event.content, tok), vocab);
        if (index < opts.train_size) {
            trainer.add(fv, labeled.label());
        } else {
            if (!model) model = trainer.finish();
            confusion.add(classify(*model, fv), labeled.label());
        }
    });

    MetricsReport report =
        build_report(scan.documents, model->feature_count(), opts.train_size,
                     scan.errors, confusion.matrix(),
                     most_informative(*model, opts.top));
    emit_report(opts, report);
    if (!opts.model_file.empty()) save_model_file(*model, opts.model_file);
    return 0;
}

int cmd_train(const PipelineOptions& opts) {
    TokenizerConfig tok = make_tokenizer(opts);
    ScanResult scan = scan_corpus(opts.inputs, tok);
    maybe_print_stats(opts, scan.stats);
    if (opts.train_size < 1 || opts.train_size > scan.documents) {
        throw config_error("train size must satisfy 1 <= n <= " +
                           std::to_string(scan.documents) + ", got " +
                           std::to_string(opts.train_size));
    }
    Vocabulary vocab = select_vocabulary(scan.table, opts.features, opts.prealloc_frac);

    Trainer trainer(vocab, opts.alpha, tok);
    stream_labeled(opts.inputs, [&](std::size_t index, const std::string&,
                                    LabeledEvent&& labeled) {
        if (index >= opts.train_size) return;
        trainer.add(vectorize(tokenize(labeled.event.content, tok), vocab),
                    labeled.label());
    });
    save_model_file(trainer.finish(), opts.model_file);
    return 0;
}

int cmd_classify(const PipelineOptions& opts) {
    NBModel model = load_model_file(opts.model_file);
    std::ofstream file_out;
    if (!opts.out_file.empty()) {
        file_out.open(opts.out_file, std::ios::binary);
        if (!file_out) throw io_error("cannot write file: " + opts.out_file);
    }
    std::ostream& out = opts.out_file.empty() ? std::cout : file_out;

    out << "# file\tsource_line\tpredicted\tlog_score_error\tlog_score_non_error\n";
    char scores_buf[80];
    ParseStats all_stats;
    for (const std::string& path : opts.inputs) {
        all_stats += parse_file(path, [&](LogEvent&& ev) {
            FeatureVector fv = vectorize(
                tokenize(ev.content, model.tokenizer), model.vocabulary);
            auto scores = posterior_scores(model, fv);
            ClassLabel label =
                scores[class_index(ClassLabel::error)] >
                        scores[class_index(ClassLabel::non_error)]
                    ? ClassLabel::error
                    : ClassLabel::non_error;
            out << path << '\t' << ev.source_line << '\t' << to_string(label);
            std::snprintf(scores_buf, sizeof scores_buf, "\t%.17g\t%.17g\n",
                          scores[class_index(ClassLabel::error)],
                          scores[class_index(ClassLabel::non_error)]);
            out << scores_buf;
        });
    }
    out.flush();
    if (!out) throw io_error("write failure in predictions output");
    if (opts.stats) std::cerr << render_stats(all_stats);
    return 0;
}

int cmd_eval(const PipelineOptions& opts) {
    NBModel model = load_model_file(opts.model_file);
    std::uint64_t documents = 0;
    std::uint64_t errors = 0;
    ConfusionCounter confusion;
    ParseStats all_stats;
    for (const std::string& path : opts.inputs) {
        all_stats += parse_file(path, [&](LogEvent&& ev) {
            LabeledEvent labeled = label_event(std::move(ev));
            std::size_t index = documents++;
            if (labeled.is_error) ++errors;
            if (index < opts.train_size) return;  // skip the training prefix
            FeatureVector fv = vectorize(
                tokenize(labeled.event.content, model.tokenizer), model.vocabulary);
            confusion.add(classify(model, fv), labeled.label());
        });
    }
    if (opts.stats) std::cerr << render_stats(all_stats);
    if (documents == 0) throw config_error("no events parsed from the input files");
    if (confusion.matrix().total() == 0)
        throw config_error("train size leaves no events to evaluate");
    MetricsReport report =
        build_report(documents, model.feature_count(), opts.train_size, errors,
                     confusion.matrix(), most_informative(model, opts.top));
    emit_report(opts, report);
    return 0;
}

int cmd_inspect(const PipelineOptions& opts) {
    NBModel model = load_model_file(opts.model_file);
    std::cout << render_most_informative(most_informative(model, opts.top));
    return 0;
}

int cmd_gen(const GenOptions& opts) {
    GeneratorSpec spec;
    spec.count = opts.count;
    spec.error_rate = opts.error_rate;
    spec.seed = opts.seed;
    spec.format_mix = opts.format_mix;
    std::string truth =
        opts.truth_file.empty() ? opts.out_file + ".truth" : opts.truth_file;
    generate_files(spec, opts.out_file, truth);
    return 0;
}

void add_input_flag(CLI::App* cmd, PipelineOptions& opts) {
    cmd->add_option("--input", opts.inputs, "Input log file (repeatable, processed in order)")
        ->required()
        ->take_all();
}

void add_training_flags(CLI::App* cmd, PipelineOptions& opts) {
    cmd->add_option("--features", opts.features, "Feature count p")
        ->capture_default_str();
    cmd->add_option("--prealloc-frac", opts.prealloc_frac,
                    "Fraction q of feature slots reserved for the most frequent "
                    "error-class tokens")
        ->capture_default_str();
    cmd->add_option("--train-size", opts.train_size,
                    "Train on the first N events (time-consecutive)")
        ->required();
    cmd->add_option("--alpha", opts.alpha, "Smoothing pseudocount (> 0)")
        ->capture_default_str();
    cmd->add_option("--stop-words", opts.stop_words_file,
                    "Stop-word override file (one token per line, '#' comments)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rare-event log classification with a Bernoulli naive Bayes model"};
    app.set_version_flag("--version", "lognb 0.1.0");
    app.require_subcommand(1);

    PipelineOptions run_opts, train_opts, classify_opts, eval_opts, inspect_opts;
    GenOptions gen_opts;

    CLI::App* run = app.add_subcommand(
        "run", "Parse, label, select features, split, train, classify, report");
    add_input_flag(run, run_opts);
    add_training_flags(run, run_opts);
    run->add_option("--top", run_opts.top, "Informative features to report")
        ->capture_default_str();
    run->add_option("--out", run_opts.out_file, "Also write the report here");
    run->add_option("--json-out", run_opts.json_out_file,
                    "Write the machine-readable report here");
    run->add_option("--model", run_opts.model_file, "Save the trained model here");
    run->add_flag("--stats", run_opts.stats, "Print parse statistics to stderr");

    CLI::App* train = app.add_subcommand("train", "Train on the first N events and save the model");
    add_input_flag(train, train_opts);
    add_training_flags(train, train_opts);
    train->add_option("--model", train_opts.model_file, "Model output path")->required();
    train->add_flag("--stats", train_opts.stats, "Print parse statistics to stderr");

    CLI::App* classify = app.add_subcommand(
        "classify", "Predict every event in the input with a saved model");
    classify->add_option("--model", classify_opts.model_file, "Model path")->required();
    add_input_flag(classify, classify_opts);
    classify->add_option("--out", classify_opts.out_file,
                         "Predictions file (default: stdout)");
    classify->add_flag("--stats", classify_opts.stats, "Print parse statistics to stderr");

    CLI::App* eval = app.add_subcommand(
        "eval", "Score labeled input with a saved model and report metrics");
    eval->add_option("--model", eval_opts.model_file, "Model path")->required();
    add_input_flag(eval, eval_opts);
    eval->add_option("--train-size", eval_opts.train_size,
                     "Skip the first N events (the training prefix)")
        ->capture_default_str();
    eval->add_option("--top", eval_opts.top, "Informative features to report")
        ->capture_default_str();
    eval->add_option("--out", eval_opts.out_file, "Also write the report here");
    eval->add_option("--json-out", eval_opts.json_out_file,
                     "Write the machine-readable report here");
    eval->add_flag("--stats", eval_opts.stats, "Print parse statistics to stderr");

    CLI::App* inspect = app.add_subcommand(
        "inspect", "Print the most informative features of a saved model");
    inspect->add_option("--model", inspect_opts.model_file, "Model path")->required();
    inspect->add_option("--top", inspect_opts.top, "Features to list")
        ->capture_default_str();

    CLI::App* gen = app.add_subcommand(
        "gen", "Write a seeded synthetic corpus with a ground-truth sidecar");
    gen->add_option("--out", gen_opts.out_file, "Log file to write")->required();
    gen->add_option("--truth", gen_opts.truth_file,
                    "Ground-truth sidecar (default: <out>.truth)");
    gen->add_option("--count", gen_opts.count, "Number of messages")->required();
    gen->add_option("--error-rate", gen_opts.error_rate, "Error probability per message")
        ->capture_default_str();
    gen->add_option("--seed", gen_opts.seed, "Generator seed")->capture_default_str();
    gen->add_option("--format-mix", gen_opts.format_mix,
                    "Fraction of pipe-delimited (dialect B) lines")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (train->parsed()) return cmd_train(train_opts);
        if (classify->parsed()) return cmd_classify(classify_opts);
        if (eval->parsed()) return cmd_eval(eval_opts);
        if (inspect->parsed()) return cmd_inspect(inspect_opts);
        if (gen->parsed()) return cmd_gen(gen_opts);
    } catch (const lognb::config_error& e) {
        std::cerr << "lognb: " << e.what() << "\n";
        return 2;
    } catch (const lognb::io_error& e) {
        std::cerr << "lognb: " << e.what() << "\n";
        return 3;
    } catch (const lognb::degenerate_training_error& e) {
        std::cerr << "lognb: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "lognb: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
