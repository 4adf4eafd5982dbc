// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <unordered_set>

namespace lognb {

/// Distinct lowercase tokens of one message; presence only, multiplicity
/// discarded (the downstream features are Bernoulli flags).
using TokenBag = std::unordered_set<std::string>;

/// Embedded default stop-word list (~120 English function words: articles,
/// prepositions, pronouns, auxiliaries).
const std::unordered_set<std::string>& default_stop_words();

/// Load a stop-word override file: UTF-8, one token per line, '#' starts a
/// comment, entries lowercased. Throws io_error if unreadable.
std::unordered_set<std::string> load_stop_words(const std::string& path);

struct TokenizerConfig {
    /// Entries must be lowercase and non-empty (load_stop_words and
    /// default_stop_words guarantee this).
    std::unordered_set<std::string> stop_words = default_stop_words();
    /// Characters treated as token-internal in addition to letters and
    /// digits. Underscore and asterisk keep identifiers like
    /// sp_Pronto_AddAgentActivity and masked vendor names in one piece.
    std::string extra_token_chars = "_*";
    /// Drop tokens with no alphabetic character, and tokens that are hex
    /// literals (hex digits only, optional single trailing 'h') of total
    /// length >= 4 -- machine addresses like 11DE6B80 or 802h.
    bool exclude_numbers = true;
};

/// Reduce message content to its set of feature-eligible tokens. Tokens are
/// maximal runs of [letters, digits, extra_token_chars]; everything else
/// separates. Each token is lowercased, then dropped if it is a stop word
/// or (with exclude_numbers) fails the number/hex rules above.
TokenBag tokenize(std::string_view content, const TokenizerConfig& config);

}  // namespace lognb
