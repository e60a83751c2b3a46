#pragma once

#include <map>
#include <string>
#include <vector>

namespace archrec {

// Bags of words keyed by entity id.
struct Corpus {
    std::map<std::string, std::map<std::string, long>> documents;

    std::vector<std::string> vocabulary() const;  // sorted distinct tokens
    long total_tokens() const;
    void validate() const;  // token shape and count positivity
};

// {"documents": {"<entity>": {"<token>": count}}}
Corpus corpus_from_json(const std::string& text);
std::string corpus_to_json(const Corpus& corpus);

}  // namespace archrec
