// SPDX-License-Identifier: Apache-2.0

#include "lognb/synth.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <unordered_set>

#include "lognb/errors.hpp"

namespace lognb {
namespace {

// Portable draws on top of the standard-fixed mt19937_64 sequence. The
// standard distributions are implementation-defined, so they are never used
// here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Modulo-biased for n not a power of two; negligible at these pool
    // sizes and irrelevant to the contract, which only requires a fixed,
    // documented rule.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  private:
    std::mt19937_64 engine_;
};

constexpr const char* kNonErrorTypes[3] = {"Info", "Debug", "Warning"};

void append_two_digits(std::string& out, int v) {
    out += static_cast<char>('0' + v / 10);
    out += static_cast<char>('0' + v % 10);
}

}  // namespace

std::vector<SignalToken> GeneratorSpec::default_error_signal() {
    return {{"watchdog", 0.9},  {"panic", 0.9},     {"unreachable", 0.9},
            {"refused", 0.9},   {"overload", 0.9},  {"stalled", 0.9},
            {"corrupted", 0.9}, {"shutdown", 0.9}};
}

std::vector<SignalToken> GeneratorSpec::default_non_error_signal() {
    // Kept deliberately weak: six tokens at 0.35 so that their mere absence
    // cannot out-vote the class prior and identify errors on its own.
    return {{"heartbeat", 0.35}, {"session", 0.35}, {"polling", 0.35},
            {"queued", 0.35},    {"rendered", 0.35}, {"cached", 0.35}};
}

std::vector<std::string> GeneratorSpec::default_noise_tokens() {
    std::vector<std::string> pool;
    pool.reserve(520);
    char buf[16];
    for (int i = 0; i < 520; ++i) {
        std::snprintf(buf, sizeof buf, "svc%03d", i);
        pool.emplace_back(buf);
    }
    return pool;
}

void validate(const GeneratorSpec& spec) {
    if (spec.count < 1) throw config_error("generator spec: count must be >= 1");
    if (!(spec.error_rate >= 0.0 && spec.error_rate <= 1.0))
        throw config_error("generator spec: error_rate must be in [0, 1]");
    if (!(spec.format_mix >= 0.0 && spec.format_mix <= 1.0))
        throw config_error("generator spec: format_mix must be in [0, 1]");
    if (spec.error_signal.empty())
        throw config_error("generator spec: error_signal pool must be non-empty");
    if (spec.non_error_signal.empty())
        throw config_error("generator spec: non_error_signal pool must be non-empty");
    if (spec.noise_tokens.empty())
        throw config_error("generator spec: noise_tokens pool must be non-empty");
    if (spec.noise_min > spec.noise_max)
        throw config_error("generator spec: noise_min must be <= noise_max");
    std::unordered_set<std::string> seen;
    for (const SignalToken& t : spec.error_signal) {
        if (!(t.probability >= 0.0 && t.probability <= 1.0))
            throw config_error("generator spec: error_signal probability out of [0, 1]");
        seen.insert(t.token);
    }
    for (const SignalToken& t : spec.non_error_signal) {
        if (!(t.probability >= 0.0 && t.probability <= 1.0))
            throw config_error(
                "generator spec: non_error_signal probability out of [0, 1]");
        if (seen.contains(t.token))
            throw config_error(
                "generator spec: signal pools must be disjoint across classes (\"" +
                t.token + "\")");
    }
}

std::pair<std::string, GroundTruth> generate(const GeneratorSpec& spec) {
    validate(spec);
    using namespace std::chrono;

    Rng rng(spec.seed);
    std::string text;
    GroundTruth truth;
    truth.entries.reserve(spec.count);

    sys_time<milliseconds> clock{sys_days{year{2014} / 6 / 4}};

    for (std::uint64_t i = 0; i < spec.count; ++i) {
        bool is_error = rng.bernoulli(spec.error_rate);
        bool dialect_b = rng.bernoulli(spec.format_mix);
        clock += milliseconds{1 + rng.below(200)};
        bool with_seq = !dialect_b && rng.bernoulli(0.5);
        const char* type =
            is_error ? "Error" : kNonErrorTypes[rng.below(3)];

        std::string content;
        const auto& pool = is_error ? spec.error_signal : spec.non_error_signal;
        for (const SignalToken& t : pool) {
            if (rng.bernoulli(t.probability)) {
                if (!content.empty()) content += ' ';
                content += t.token;
            }
        }
        std::uint64_t noise_count =
            spec.noise_min + rng.below(spec.noise_max - spec.noise_min + 1);
        for (std::uint64_t j = 0; j < noise_count; ++j) {
            if (!content.empty()) content += ' ';
            content += spec.noise_tokens[rng.below(spec.noise_tokens.size())];
        }

        sys_days day = floor<days>(clock);
        year_month_day ymd{day};
        hh_mm_ss<milliseconds> tod{clock - day};
        char seq[8];
        std::snprintf(seq, sizeof seq, "%05llu",
                      static_cast<unsigned long long>(i % 100000));

        std::string line;
        if (dialect_b) {
            append_two_digits(line, static_cast<int>(unsigned{ymd.month()}));
            line += '/';
            append_two_digits(line, static_cast<int>(unsigned{ymd.day()}));
            line += ' ';
        } else {
            line += std::to_string(static_cast<int>(ymd.year()));
            append_two_digits(line, static_cast<int>(unsigned{ymd.month()}));
            append_two_digits(line, static_cast<int>(unsigned{ymd.day()}));
            line += ' ';
        }
        append_two_digits(line, static_cast<int>(tod.hours().count()));
        append_two_digits(line, static_cast<int>(tod.minutes().count()));
        append_two_digits(line, static_cast<int>(tod.seconds().count()));
        line += '.';
        int ms = static_cast<int>(tod.subseconds().count());
        line += static_cast<char>('0' + ms / 100);
        append_two_digits(line, ms % 100);

        if (dialect_b) {
            line += '|';
            line += seq;
            line += '|';
            line += type;
            line += " |";
            line += content;
        } else {
            line += ' ';
            if (with_seq) {
                line += seq;
                line += ' ';
            }
            line += type;
            line += ": ";
            line += content;
        }

        text += line;
        text += '\n';
        truth.entries.push_back(
            {static_cast<std::size_t>(i),
             is_error ? ClassLabel::error : ClassLabel::non_error, std::move(line)});
    }
    return {std::move(text), std::move(truth)};
}

std::string render_truth(const GroundTruth& truth) {
    std::string out;
    for (const GroundTruthEntry& e : truth.entries) {
        out += std::to_string(e.index);
        out += ',';
        out += to_string(e.label);
        out += '\n';
    }
    return out;
}

void generate_files(const GeneratorSpec& spec, const std::string& log_path,
                    const std::string& truth_path) {
    auto [text, truth] = generate(spec);
    std::ofstream log(log_path, std::ios::binary);
    if (!log) throw io_error("cannot write log file: " + log_path);
    log << text;
    log.flush();
    if (!log) throw io_error("write failure in log file: " + log_path);
    std::ofstream sidecar(truth_path, std::ios::binary);
    if (!sidecar) throw io_error("cannot write ground-truth file: " + truth_path);
    sidecar << render_truth(truth);
    sidecar.flush();
    if (!sidecar) throw io_error("write failure in ground-truth file: " + truth_path);
}

}  // namespace lognb
