#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace iqucs {

// Frequency-ranked corpus of the 100 most common English words, rank 0 first.
// Serves as the deterministic fallback when no word list file is supplied.
inline const std::vector<std::string>& builtin_words() {
    static const std::vector<std::string> words = {
        "the",   "be",    "to",    "of",    "and",   "a",      "in",    "that",  "have",
        "I",     "it",    "for",   "not",   "on",    "with",   "he",    "as",    "you",
        "do",    "at",    "this",  "but",   "his",   "by",     "from",  "they",  "we",
        "say",   "her",   "she",   "or",    "an",    "will",   "my",    "one",   "all",
        "would", "there", "their", "what",  "so",    "up",     "out",   "if",    "about",
        "who",   "get",   "which", "go",    "me",    "when",   "make",  "can",   "like",
        "time",  "no",    "just",  "him",   "know",  "take",   "people", "into", "year",
        "your",  "good",  "some",  "could", "them",  "see",    "other", "than",  "then",
        "now",   "look",  "only",  "come",  "its",   "over",   "think", "also",  "back",
        "after", "use",   "two",   "how",   "our",   "work",   "first", "well",  "way",
        "even",  "new",   "want",  "because", "any", "these",  "give",  "day",   "most",
        "us"};
    return words;
}

// Plain text, one word per line, rank = 0-based line number, empty lines
// forbidden. (A well-formed trailing newline does not produce an empty line.)
inline std::vector<std::string> read_wordlist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open word list file: " + path);
    }
    std::vector<std::string> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            throw std::runtime_error("word list " + path + ": empty line " +
                                     std::to_string(line_no));
        }
        words.push_back(line);
    }
    return words;
}

} // namespace iqucs
