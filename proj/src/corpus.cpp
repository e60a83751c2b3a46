#include "archrec/corpus.hpp"

#include <set>

#include <json.hpp>

#include "archrec/model.hpp"

namespace archrec {

std::vector<std::string> Corpus::vocabulary() const {
    std::set<std::string> tokens;
    for (const auto& [id, bag] : documents)
        for (const auto& [token, count] : bag) tokens.insert(token);
    return {tokens.begin(), tokens.end()};
}

long Corpus::total_tokens() const {
    long total = 0;
    for (const auto& [id, bag] : documents)
        for (const auto& [token, count] : bag) total += count;
    return total;
}

void Corpus::validate() const {
    for (const auto& [id, bag] : documents) {
        if (!valid_identifier(id))
            throw Error(Error::Kind::Validation, "invalid document id: '" + id + "'");
        for (const auto& [token, count] : bag) {
            if (!valid_identifier(token))
                throw Error(Error::Kind::Validation,
                            "invalid token '" + token + "' in document '" + id + "'");
            if (count <= 0)
                throw Error(Error::Kind::Validation,
                            "non-positive token count in document '" + id + "'");
        }
    }
}

Corpus corpus_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Error::Kind::Parse, std::string("invalid corpus JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("documents") || !doc["documents"].is_object())
        throw Error(Error::Kind::Parse, "corpus JSON must have a 'documents' object");
    Corpus corpus;
    for (const auto& [id, bag] : doc["documents"].items()) {
        if (!bag.is_object())
            throw Error(Error::Kind::Parse, "document '" + id + "' must map tokens to counts");
        auto& target = corpus.documents[id];
        for (const auto& [token, count] : bag.items()) {
            if (!count.is_number_integer() || count.get<long>() <= 0)
                throw Error(Error::Kind::Parse,
                            "token '" + token + "' in document '" + id +
                                "' needs a positive integer count");
            target[token] = count.get<long>();
        }
    }
    corpus.validate();
    return corpus;
}

std::string corpus_to_json(const Corpus& corpus) {
    nlohmann::json documents = nlohmann::json::object();
    for (const auto& [id, bag] : corpus.documents) {
        nlohmann::json entry = nlohmann::json::object();
        for (const auto& [token, count] : bag) entry[token] = count;
        documents[id] = std::move(entry);
    }
    nlohmann::json doc;
    doc["documents"] = std::move(documents);
    return doc.dump(2) + "\n";
}

}  // namespace archrec
