#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace archrec {

struct StopWordSet {
    std::set<std::string> general;
    std::set<std::string> domain_specific;
    std::set<std::string> auto_tokens;  // derived, e.g. system-name tokens

    bool contains(const std::string& token) const {
        return general.count(token) || domain_specific.count(token) ||
               auto_tokens.count(token);
    }
};

struct TokenizeOptions {
    bool stem = true;
    bool strip_comments = false;
    bool strip_license_header = false;
};

// Classic Porter stemming algorithm (1980). Expects a lowercase word.
std::string porter_stem(const std::string& word);

// Replaces // and /* */ comments with spaces; string and character
// literals are honored so their content is never treated as a comment.
std::string strip_code_comments(const std::string& text);

// Drops the leading run of comments when at least `min_hits` of its
// tokens belong to the license lexicon.
std::string strip_license_header_block(const std::string& text, int min_hits = 5);

// Distinctive words of the standard source-file license header, raw and
// stemmed forms together.
const std::set<std::string>& license_lexicon();

// Splits alphanumeric runs at camelCase boundaries and lowercases;
// drops tokens shorter than 2 characters and all-digit tokens.
std::vector<std::string> split_words(const std::string& text);

// Pipeline: optional comment/license stripping -> split_words ->
// stop-word removal -> optional Porter stemming. Returns a multiset.
std::map<std::string, long> tokenize_document(const std::string& text,
                                              const StopWordSet& stops,
                                              const TokenizeOptions& options);

// Bundled general stop list (English function words + Java keywords).
const std::vector<std::string>& default_general_stopwords();

// domain_file and system_name may be empty; an unreadable domain file is
// a configuration error.
StopWordSet build_stopword_set(const std::vector<std::string>& general_list,
                               const std::string& domain_file = "",
                               const std::string& system_name = "");

}  // namespace archrec
