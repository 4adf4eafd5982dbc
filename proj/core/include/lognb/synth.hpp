// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lognb/log_event.hpp"

namespace lognb {

/// A class-indicative token and its per-message inclusion probability.
struct SignalToken {
    std::string token;
    double probability = 0.9;
};

/// Seeded synthetic corpus spec with planted token-class signal.
///
/// Determinism contract: the generator is std::mt19937_64 (its output
/// sequence is fixed by the C++ standard) with the draw rules documented in
/// README.md -- uniform doubles are (next() >> 11) * 2^-53, bounded integers
/// are next() % n -- so equal specs produce byte-identical corpora on every
/// platform.
struct GeneratorSpec {
    std::uint64_t count = 0;
    /// Errors are rare by default, mirroring production systems where the
    /// interesting class is well under 1-2% of traffic.
    double error_rate = 0.01;
    std::uint64_t seed = 1;
    /// Fraction of lines emitted in the pipe-delimited dialect B.
    double format_mix = 0.25;
    /// Disjoint class-exclusive pools. Defaults give errors a strong
    /// signal (8 tokens at 0.9) and keep the non-error signal weak enough
    /// that it cannot identify errors by absence alone.
    std::vector<SignalToken> error_signal = default_error_signal();
    std::vector<SignalToken> non_error_signal = default_non_error_signal();
    /// Shared pool, drawn uniformly for both classes. The default pool size
    /// and per-message count are sized so every noise token outranks every
    /// error-signal token in overall document frequency.
    std::vector<std::string> noise_tokens = default_noise_tokens();
    std::uint32_t noise_min = 6;
    std::uint32_t noise_max = 8;

    static std::vector<SignalToken> default_error_signal();
    static std::vector<SignalToken> default_non_error_signal();
    static std::vector<std::string> default_noise_tokens();
};

/// Throws config_error naming the violated field.
void validate(const GeneratorSpec& spec);

struct GroundTruthEntry {
    std::size_t index = 0;
    ClassLabel label = ClassLabel::non_error;
    std::string line;  // the exact generated log line
};

struct GroundTruth {
    std::vector<GroundTruthEntry> entries;
};

/// Generate the corpus. Every message is one line; the message type is
/// "Error" for the error class and one of Info/Debug/Warning otherwise, so
/// type-based labeling recovers the ground truth exactly. Timestamps
/// increase monotonically from 2014-06-04 00:00:00.000.
std::pair<std::string, GroundTruth> generate(const GeneratorSpec& spec);

/// Sidecar text: one `index,class` line per message.
std::string render_truth(const GroundTruth& truth);

/// Write the corpus and its ground-truth sidecar. Throws io_error.
void generate_files(const GeneratorSpec& spec, const std::string& log_path,
                    const std::string& truth_path);

}  // namespace lognb
