#include "archrec/tokenize.hpp"

#include <algorithm>
#include <cctype>

#include "archrec/model.hpp"
#include "archrec/rsf.hpp"

namespace archrec {

namespace {

// ---- Porter stemmer -------------------------------------------------
// Direct rendering of the 1980 algorithm: b holds the word, k the last
// letter, j the stem end set by a successful suffix match.
class PorterStemmer {
public:
    std::string stem(const std::string& word) {
        b = word;
        k = static_cast<int>(b.size()) - 1;
        if (k <= 1) return b;  // two-letter words are left alone
        step1ab();
        step1c();
        step2();
        step3();
        step4();
        step5();
        return b.substr(0, k + 1);
    }

private:
    std::string b;
    int k = 0;
    int j = 0;

    bool cons(int i) const {
        switch (b[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // measure of b[0..j]: [C](VC)^m[V]
    int m() const {
        int n = 0, i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            i++;
        }
        i++;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                i++;
            }
            i++;
            n++;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                i++;
            }
            i++;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons(int i) const {
        if (i < 1) return false;
        if (b[i] != b[i - 1]) return false;
        return cons(i);
    }

    // cvc at i, final consonant not w, x or y
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b[i];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(const char* s) {
        int length = static_cast<int>(std::char_traits<char>::length(s));
        if (length > k + 1) return false;
        if (b.compare(k - length + 1, length, s) != 0) return false;
        j = k - length;
        return true;
    }

    void set_to(const char* s) {
        int length = static_cast<int>(std::char_traits<char>::length(s));
        b.replace(j + 1, b.size() - j - 1, s);
        k = j + length;
    }

    void r(const char* s) {
        if (m() > 0) set_to(s);
    }

    void step1ab() {
        if (b[k] == 's') {
            if (ends("sses"))
                k -= 2;
            else if (ends("ies"))
                set_to("i");
            else if (b[k - 1] != 's')
                k--;
        }
        if (ends("eed")) {
            if (m() > 0) k--;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at"))
                set_to("ate");
            else if (ends("bl"))
                set_to("ble");
            else if (ends("iz"))
                set_to("ize");
            else if (double_cons(k)) {
                k--;
                char ch = b[k];
                if (ch == 'l' || ch == 's' || ch == 'z') k++;
            } else if (m() == 1 && cvc(k)) {
                set_to("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b[k] = 'i';
    }

    void step2() {
        switch (b[k - 1]) {
            case 'a':
                if (ends("ational")) { r("ate"); break; }
                if (ends("tional")) { r("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { r("ence"); break; }
                if (ends("anci")) { r("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { r("ize"); break; }
                break;
            case 'l':
                if (ends("abli")) { r("able"); break; }
                if (ends("alli")) { r("al"); break; }
                if (ends("entli")) { r("ent"); break; }
                if (ends("eli")) { r("e"); break; }
                if (ends("ousli")) { r("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { r("ize"); break; }
                if (ends("ation")) { r("ate"); break; }
                if (ends("ator")) { r("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { r("al"); break; }
                if (ends("iveness")) { r("ive"); break; }
                if (ends("fulness")) { r("ful"); break; }
                if (ends("ousness")) { r("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { r("al"); break; }
                if (ends("iviti")) { r("ive"); break; }
                if (ends("biliti")) { r("ble"); break; }
                break;
            default:
                break;
        }
    }

    void step3() {
        switch (b[k]) {
            case 'e':
                if (ends("icate")) { r("ic"); break; }
                if (ends("ative")) { r(""); break; }
                if (ends("alize")) { r("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { r("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { r("ic"); break; }
                if (ends("ful")) { r(""); break; }
                break;
            case 's':
                if (ends("ness")) { r(""); break; }
                break;
            default:
                break;
        }
    }

    void step4() {
        bool matched = false;
        switch (b[k - 1]) {
            case 'a': matched = ends("al"); break;
            case 'c': matched = ends("ance") || ends("ence"); break;
            case 'e': matched = ends("er"); break;
            case 'i': matched = ends("ic"); break;
            case 'l': matched = ends("able") || ends("ible"); break;
            case 'n':
                matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
                break;
            case 'o':
                matched = (ends("ion") && j >= 0 && (b[j] == 's' || b[j] == 't')) ||
                          ends("ou");
                break;
            case 's': matched = ends("ism"); break;
            case 't': matched = ends("ate") || ends("iti"); break;
            case 'u': matched = ends("ous"); break;
            case 'v': matched = ends("ive"); break;
            case 'z': matched = ends("ize"); break;
            default: break;
        }
        if (matched && m() > 1) k = j;
    }

    void step5() {
        j = k;
        if (b[k] == 'e') {
            int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1))) k--;
        }
        if (b[k] == 'l' && double_cons(k) && m() > 1) k--;
    }
};

bool all_digits(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Span [0, end) of the leading comment block: one /* */ comment, or a run
// of // lines not broken by a blank line. Later comments are not part of
// the header even when they directly follow it.
std::size_t leading_comment_span(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (text.compare(i, 2, "/*") == 0) {
        auto close = text.find("*/", i + 2);
        return close == std::string::npos ? text.size() : close + 2;
    }
    if (text.compare(i, 2, "//") != 0) return 0;
    std::size_t end = 0;
    while (text.compare(i, 2, "//") == 0) {
        i = text.find('\n', i);
        i = i == std::string::npos ? text.size() : i + 1;
        end = i;
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    }
    return end;
}

}  // namespace

std::string porter_stem(const std::string& word) {
    PorterStemmer stemmer;
    return stemmer.stem(word);
}

std::string strip_code_comments(const std::string& text) {
    std::string out = text;
    std::size_t i = 0;
    while (i < out.size()) {
        char c = out[i];
        if (c == '"' || c == '\'') {
            char quote = c;
            ++i;
            while (i < out.size() && out[i] != quote) {
                if (out[i] == '\\' && i + 1 < out.size()) ++i;
                ++i;
            }
            if (i < out.size()) ++i;
            continue;
        }
        if (c == '/' && i + 1 < out.size() && out[i + 1] == '/') {
            while (i < out.size() && out[i] != '\n') out[i++] = ' ';
            continue;
        }
        if (c == '/' && i + 1 < out.size() && out[i + 1] == '*') {
            out[i] = out[i + 1] = ' ';
            i += 2;
            while (i < out.size()) {
                if (out[i] == '*' && i + 1 < out.size() && out[i + 1] == '/') {
                    out[i] = out[i + 1] = ' ';
                    i += 2;
                    break;
                }
                if (out[i] != '\n') out[i] = ' ';
                ++i;
            }
            continue;
        }
        ++i;
    }
    return out;
}

const std::set<std::string>& license_lexicon() {
    static const std::set<std::string> lexicon = [] {
        std::vector<std::string> words = {
            "licensed",   "license",     "licenses",   "apache",      "software",
            "foundation", "asf",         "contributor", "agreements", "agreement",
            "notice",     "copyright",   "ownership",  "compliance",  "obtain",
            "applicable", "law",         "agreed",     "writing",     "distributed",
            "basis",      "warranties",  "conditions", "kind",        "express",
            "implied",    "permissions", "limitations", "governing",  "version",
        };
        std::set<std::string> all;
        for (const auto& w : words) {
            all.insert(w);
            all.insert(porter_stem(w));
        }
        return all;
    }();
    return lexicon;
}

std::string strip_license_header_block(const std::string& text, int min_hits) {
    std::size_t span = leading_comment_span(text);
    if (span == 0) return text;
    int hits = 0;
    for (const auto& token : split_words(text.substr(0, span)))
        if (license_lexicon().count(token)) ++hits;
    if (hits < min_hits) return text;
    return text.substr(span);
}

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> words;
    std::string run;
    auto flush_run = [&] {
        if (run.size() >= 2 && !all_digits(run)) words.push_back(to_lower(run));
        run.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (!std::isalnum(c)) {
            flush_run();
            continue;
        }
        if (!run.empty() && std::isupper(c)) {
            unsigned char prev = run.back();
            bool lower_to_upper = std::islower(prev) || std::isdigit(prev);
            bool upper_run_ends = std::isupper(prev) && i + 1 < text.size() &&
                                  std::islower(static_cast<unsigned char>(text[i + 1]));
            if (lower_to_upper || upper_run_ends) flush_run();
        }
        run.push_back(static_cast<char>(c));
    }
    flush_run();
    return words;
}

std::map<std::string, long> tokenize_document(const std::string& text,
                                              const StopWordSet& stops,
                                              const TokenizeOptions& options) {
    std::string body = text;
    if (options.strip_license_header) body = strip_license_header_block(body);
    if (options.strip_comments) body = strip_code_comments(body);
    std::map<std::string, long> bag;
    for (const auto& word : split_words(body)) {
        if (stops.contains(word)) continue;
        bag[options.stem ? porter_stem(word) : word]++;
    }
    return bag;
}

const std::vector<std::string>& default_general_stopwords() {
    static const std::vector<std::string> words = {
        // English function words
        "the", "a", "an", "and", "or", "of", "to", "in", "is", "it", "for",
        "this", "that", "these", "those", "with", "be", "been", "being", "as",
        "by", "on", "not", "are", "was", "were", "will", "would", "shall",
        "should", "can", "could", "may", "might", "must", "has", "have", "had",
        "do", "does", "did", "done", "if", "else", "then", "than", "but",
        "all", "any", "each", "which", "what", "when", "where", "who", "whom",
        "why", "how", "no", "nor", "so", "too", "very", "just", "also", "from",
        "at", "into", "onto", "over", "under", "again", "only", "own", "same",
        "such", "about", "after", "before", "between", "through", "during",
        "above", "below", "up", "down", "out", "off", "here", "there", "we",
        "our", "you", "your", "they", "their", "them", "he", "she", "his",
        "her", "him", "its", "my", "me", "us", "am",
        // Java language keywords and literals
        "abstract", "assert", "boolean", "break", "byte", "case", "catch",
        "char", "class", "const", "continue", "default", "double", "enum",
        "extends", "final", "finally", "float", "goto", "implements", "import",
        "instanceof", "int", "interface", "long", "native", "new", "package",
        "private", "protected", "public", "return", "short", "static",
        "strictfp", "super", "switch", "synchronized", "throw", "throws",
        "transient", "try", "void", "volatile", "while", "true", "false",
        "null", "var", "record", "sealed", "permits", "yield",
    };
    return words;
}

StopWordSet build_stopword_set(const std::vector<std::string>& general_list,
                               const std::string& domain_file,
                               const std::string& system_name) {
    if (general_list.empty())
        throw Error(Error::Kind::Config, "general stop-word list must not be empty");
    StopWordSet stops;
    for (const auto& word : general_list) stops.general.insert(to_lower(word));
    if (!domain_file.empty()) {
        std::string content;
        try {
            content = read_text_file(domain_file);
        } catch (const Error&) {
            throw Error(Error::Kind::Config,
                        "cannot read domain stop-word file: '" + domain_file + "'");
        }
        std::size_t pos = 0;
        while (pos <= content.size()) {
            auto nl = content.find('\n', pos);
            std::string line = trim(content.substr(
                pos, nl == std::string::npos ? std::string::npos : nl - pos));
            if (!line.empty() && line[0] != '#')
                stops.domain_specific.insert(to_lower(line));
            if (nl == std::string::npos) break;
            pos = nl + 1;
        }
    }
    if (!system_name.empty())
        for (const auto& token : split_words(system_name))
            stops.auto_tokens.insert(token);
    return stops;
}

}  // namespace archrec
