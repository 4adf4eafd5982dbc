// SPDX-License-Identifier: Apache-2.0

#include "lognb/tokenizer.hpp"

#include <cctype>
#include <fstream>

#include "lognb/errors.hpp"

namespace lognb {
namespace {

bool has_alpha(std::string_view token) {
    for (unsigned char c : token)
        if (std::isalpha(c)) return true;
    return false;
}

bool is_hex_digit(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
}

// Lowercased token that is hex digits with an optional single trailing 'h',
// total length >= 4: machine addresses ("11de6b80") and asm-style constants
// ("802h").
bool is_hex_literal(std::string_view token) {
    if (token.size() < 4) return false;
    std::string_view body = token;
    if (body.back() == 'h') body.remove_suffix(1);
    if (body.empty()) return false;
    for (char c : body)
        if (!is_hex_digit(c)) return false;
    return true;
}

}  // namespace

const std::unordered_set<std::string>& default_stop_words() {
    static const std::unordered_set<std::string> words = {
        "a",       "able",    "about",   "across", "after",   "all",    "almost",
        "also",    "am",      "among",   "an",     "and",     "any",    "are",
        "as",      "at",      "be",      "because","been",    "but",    "by",
        "can",     "cannot",  "could",   "dear",   "did",     "do",     "does",
        "either",  "else",    "ever",    "every",  "for",     "from",   "get",
        "got",     "had",     "has",     "have",   "he",      "her",    "hers",
        "him",     "his",     "how",     "however","i",       "if",     "in",
        "into",    "is",      "it",      "its",    "just",    "least",  "let",
        "like",    "likely",  "may",     "me",     "might",   "most",   "must",
        "my",      "neither", "no",      "nor",    "not",     "of",     "off",
        "often",   "on",      "only",    "or",     "other",   "our",    "own",
        "rather",  "said",    "say",     "says",   "she",     "should", "since",
        "so",      "some",    "than",    "that",   "the",     "their",  "them",
        "then",    "there",   "these",   "they",   "this",    "tis",    "to",
        "too",     "twas",    "us",      "wants",  "was",     "we",     "were",
        "what",    "when",    "where",   "which",  "while",   "who",    "whom",
        "why",     "will",    "with",    "would",  "yet",     "you",    "your"};
    return words;
}

std::unordered_set<std::string> load_stop_words(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open stop-word file: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string word;
        for (unsigned char c : line) {
            if (c == ' ' || c == '\t') continue;
            word += static_cast<char>(std::tolower(c));
        }
        if (!word.empty()) words.insert(std::move(word));
    }
    if (in.bad()) throw io_error("read failure in stop-word file: " + path);
    return words;
}

TokenBag tokenize(std::string_view content, const TokenizerConfig& config) {
    TokenBag bag;
    std::string token;
    auto is_token_char = [&](unsigned char c) {
        return std::isalnum(c) ||
               config.extra_token_chars.find(static_cast<char>(c)) != std::string::npos;
    };
    auto flush = [&] {
        if (token.empty()) return;
        bool drop = config.stop_words.contains(token) ||
                    (config.exclude_numbers &&
                     (!has_alpha(token) || is_hex_literal(token)));
        if (!drop) bag.insert(token);
        token.clear();
    };
    for (unsigned char c : content) {
        if (c < 0x80 && is_token_char(c)) {
            token += static_cast<char>(std::tolower(c));
        } else {
            flush();
        }
    }
    flush();
    return bag;
}

}  // namespace lognb
