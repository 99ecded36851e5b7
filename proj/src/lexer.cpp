#include "roundtrip/lexer.hpp"

#include <array>
#include <cctype>
#include <cstring>
#include <set>
#include <string_view>

#include "roundtrip/errors.hpp"

namespace roundtrip {

namespace {

using std::string_view;

// Reserved-word lists per the languages' official specifications.
const std::set<string_view>& reserved_words(LanguageId lang) {
    static const std::set<string_view> python = {
        "False", "None", "True", "and", "as", "assert", "async", "await", "break",
        "class", "continue", "def", "del", "elif", "else", "except", "finally",
        "for", "from", "global", "if", "import", "in", "is", "lambda", "nonlocal",
        "not", "or", "pass", "raise", "return", "try", "while", "with", "yield"};
    static const std::set<string_view> ruby = {
        "__ENCODING__", "__LINE__", "__FILE__", "BEGIN", "END", "alias", "and",
        "begin", "break", "case", "class", "def", "defined?", "do", "else",
        "elsif", "end", "ensure", "false", "for", "if", "in", "module", "next",
        "nil", "not", "or", "redo", "rescue", "retry", "return", "self", "super",
        "then", "true", "undef", "unless", "until", "when", "while", "yield"};
    static const std::set<string_view> go = {
        "break", "case", "chan", "const", "continue", "default", "defer", "else",
        "fallthrough", "for", "func", "go", "goto", "if", "import", "interface",
        "map", "package", "range", "return", "select", "struct", "switch", "type",
        "var"};
    switch (lang) {
        case LanguageId::Python: return python;
        case LanguageId::Ruby: return ruby;
        case LanguageId::Go: return go;
    }
    return python;
}

// Normative control-keyword subsets used for structural fingerprints.
const std::set<string_view>& control_words(LanguageId lang) {
    static const std::set<string_view> python = {
        "def", "return", "if", "elif", "else", "for", "while", "try", "except",
        "with", "yield", "raise"};
    static const std::set<string_view> ruby = {
        "def", "return", "if", "elsif", "else", "unless", "for", "while",
        "until", "begin", "rescue", "yield", "end"};
    static const std::set<string_view> go = {
        "func", "return", "if", "else", "for", "switch", "case", "select",
        "defer", "go", "range"};
    switch (lang) {
        case LanguageId::Python: return python;
        case LanguageId::Ruby: return ruby;
        case LanguageId::Go: return go;
    }
    return python;
}

// Multi-character operators, matched longest-first. Union across the three
// languages; a lexeme only has to be deterministic, not language-minimal.
constexpr std::array<string_view, 10> kOps3 = {
    "**=", "<<=", ">>=", "...", "<=>", "===", "//=", "&&=", "||=", "&^="};
constexpr std::array<string_view, 28> kOps2 = {
    "**", "//", "<<", ">>", "<=", ">=", "==", "!=", "->", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "&&", "||", "++", "--", ":=", "=~", "<-",
    "&^", "..", "=>", "::"};
constexpr string_view kOps1 = "+-*/%=<>!&|^~@";
constexpr string_view kPunct1 = "()[]{},:;.?";

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }
bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }

// Python string prefixes (r"", f"", rb'', ...).
bool is_string_prefix(string_view s) {
    if (s.size() > 2) return false;
    for (char c : s) {
        char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (l != 'r' && l != 'b' && l != 'u' && l != 'f') return false;
    }
    return !s.empty();
}

class Scanner {
public:
    Scanner(const std::string& src, LanguageId lang) : src_(src), lang_(lang) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                continue;
            }
            if (skip_comment()) continue;
            if (scan_string(out)) continue;
            if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
                out.push_back({TokenKind::NumberLiteral, scan_number()});
                continue;
            }
            if (is_ident_start(c)) {
                scan_word(out);
                continue;
            }
            if (scan_operator(out)) continue;
            // Anything else (punctuation, unknown bytes) is a single Punct token.
            out.push_back({TokenKind::Punct, std::string(1, c)});
            ++pos_;
        }
        return out;
    }

private:
    bool skip_comment() {
        if (lang_ == LanguageId::Go) {
            if (src_.compare(pos_, 2, "//") == 0) {
                pos_ = line_end(pos_);
                return true;
            }
            if (src_.compare(pos_, 2, "/*") == 0) {
                const size_t close = src_.find("*/", pos_ + 2);
                pos_ = close == std::string::npos ? src_.size() : close + 2;
                return true;
            }
            return false;
        }
        if (src_[pos_] == '#') {
            pos_ = line_end(pos_);
            return true;
        }
        return false;
    }

    size_t line_end(size_t from) const {
        const size_t nl = src_.find('\n', from);
        return nl == std::string::npos ? src_.size() : nl + 1;
    }

    bool scan_string(std::vector<Token>& out) {
        const size_t start = pos_;
        const char c = src_[pos_];
        switch (lang_) {
            case LanguageId::Python: {
                if (c == '"' || c == '\'') {
                    out.push_back({TokenKind::StringLiteral, python_string(start)});
                    return true;
                }
                return false;
            }
            case LanguageId::Ruby: {
                if (c == '"' || c == '\'') {
                    out.push_back({TokenKind::StringLiteral, quoted(start, c)});
                    return true;
                }
                return false;
            }
            case LanguageId::Go: {
                if (c == '"' || c == '\'') {
                    out.push_back({TokenKind::StringLiteral, quoted(start, c)});
                    return true;
                }
                if (c == '`') {
                    size_t close = src_.find('`', start + 1);
                    close = close == std::string::npos ? src_.size() : close + 1;
                    std::string text = src_.substr(start, close - start);
                    pos_ = close;
                    out.push_back({TokenKind::StringLiteral, std::move(text)});
                    return true;
                }
                return false;
            }
        }
        return false;
    }

    // Single- or double-quoted literal with backslash escapes; unterminated
    // literals run to end of input (lexing never fails).
    std::string quoted(size_t start, char quote) {
        size_t i = start + 1;
        while (i < src_.size()) {
            if (src_[i] == '\\' && i + 1 < src_.size()) {
                i += 2;
                continue;
            }
            if (src_[i] == quote) {
                ++i;
                break;
            }
            ++i;
        }
        pos_ = i;
        return src_.substr(start, i - start);
    }

    // Handles triple quotes; caller has ensured src_[start] is a quote char.
    std::string python_string(size_t start) {
        const char q = src_[start];
        const std::string triple(3, q);
        if (src_.compare(start, 3, triple) == 0) {
            size_t i = start + 3;
            while (i < src_.size()) {
                if (src_[i] == '\\' && i + 1 < src_.size()) {
                    i += 2;
                    continue;
                }
                if (src_.compare(i, 3, triple) == 0) {
                    i += 3;
                    break;
                }
                ++i;
            }
            pos_ = i;
            return src_.substr(start, i - start);
        }
        return quoted(start, q);
    }

    std::string scan_number() {
        const size_t start = pos_;
        size_t i = pos_;
        const size_t n = src_.size();
        auto digits = [&] {
            while (i < n && (is_digit(src_[i]) || src_[i] == '_')) ++i;
        };
        if (src_[i] == '0' && i + 1 < n && std::strchr("xXoObB", src_[i + 1]) != nullptr) {
            i += 2;
            while (i < n && (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_')) ++i;
        } else {
            if (src_[i] == '.') ++i;  // leading-dot float
            digits();
            if (i < n && src_[i] == '.' && i + 1 < n && is_digit(src_[i + 1])) {
                ++i;
                digits();
            }
            if (i < n && (src_[i] == 'e' || src_[i] == 'E')) {
                size_t j = i + 1;
                if (j < n && (src_[j] == '+' || src_[j] == '-')) ++j;
                if (j < n && is_digit(src_[j])) {
                    i = j;
                    digits();
                }
            }
        }
        // Imaginary suffix (Python 3j, Go 3i) when not starting an identifier.
        if (i < n && (src_[i] == 'i' || src_[i] == 'j') &&
            (i + 1 >= n || !is_ident_char(src_[i + 1]))) {
            ++i;
        }
        pos_ = i;
        return src_.substr(start, i - start);
    }

    void scan_word(std::vector<Token>& out) {
        const size_t start = pos_;
        size_t i = pos_;
        while (i < src_.size() && is_ident_char(src_[i])) ++i;
        std::string word = src_.substr(start, i - start);
        // A Python string prefix glues to the literal that follows it.
        if (lang_ == LanguageId::Python && is_string_prefix(word) && i < src_.size() &&
            (src_[i] == '"' || src_[i] == '\'')) {
            pos_ = i;
            std::string body = python_string(i);
            out.push_back({TokenKind::StringLiteral, word + body});
            return;
        }
        pos_ = i;
        if (reserved_words(lang_).count(word) != 0) {
            out.push_back({TokenKind::Keyword, std::move(word)});
        } else {
            out.push_back({TokenKind::Identifier, std::move(word)});
        }
    }

    bool scan_operator(std::vector<Token>& out) {
        for (string_view op : kOps3) {
            if (src_.compare(pos_, 3, op) == 0) {
                out.push_back({TokenKind::Operator, std::string(op)});
                pos_ += 3;
                return true;
            }
        }
        for (string_view op : kOps2) {
            if (src_.compare(pos_, 2, op) == 0) {
                out.push_back({TokenKind::Operator, std::string(op)});
                pos_ += 2;
                return true;
            }
        }
        const char c = src_[pos_];
        if (kOps1.find(c) != string_view::npos) {
            out.push_back({TokenKind::Operator, std::string(1, c)});
            ++pos_;
            return true;
        }
        if (kPunct1.find(c) != string_view::npos) {
            out.push_back({TokenKind::Punct, std::string(1, c)});
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& src_;
    LanguageId lang_;
    size_t pos_ = 0;
};

// Canonical placeholders re-lex to themselves so canonicalization is stable
// under a re-lex round trip.
bool is_placeholder(const std::string& text) {
    if (text == "NUM" || text == "STR") return true;
    if (text.size() < 3 || text.compare(0, 2, "ID") != 0) return false;
    for (size_t i = 2; i < text.size(); ++i) {
        if (!is_digit(text[i])) return false;
    }
    return true;
}

}  // namespace

const char* language_name(LanguageId lang) {
    switch (lang) {
        case LanguageId::Python: return "python";
        case LanguageId::Ruby: return "ruby";
        case LanguageId::Go: return "go";
    }
    return "python";
}

LanguageId language_from_name(const std::string& s) {
    if (s == "python") return LanguageId::Python;
    if (s == "ruby") return LanguageId::Ruby;
    if (s == "go") return LanguageId::Go;
    throw UnsupportedLanguage("unknown language: " + s);
}

std::vector<Token> tokenize(const std::string& source, LanguageId language) {
    return Scanner(source, language).run();
}

CanonicalStream canonicalize(const std::vector<Token>& tokens) {
    CanonicalStream stream;
    stream.symbols.reserve(tokens.size());
    std::map<std::string, std::string> names;
    int next_id = 0;
    for (const Token& tok : tokens) {
        switch (tok.kind) {
            case TokenKind::Identifier: {
                if (is_placeholder(tok.text)) {
                    stream.symbols.push_back(tok.text);
                    break;
                }
                auto [it, inserted] = names.try_emplace(tok.text);
                if (inserted) it->second = "ID" + std::to_string(next_id++);
                stream.symbols.push_back(it->second);
                break;
            }
            case TokenKind::NumberLiteral:
                stream.symbols.emplace_back("NUM");
                break;
            case TokenKind::StringLiteral:
                stream.symbols.emplace_back("STR");
                break;
            default:
                stream.symbols.push_back(tok.text);
                break;
        }
    }
    return stream;
}

ControlFingerprint control_fingerprint(const std::vector<Token>& tokens, LanguageId language) {
    std::vector<std::string> seq;
    seq.emplace_back(kFingerprintStart);
    for (const Token& tok : tokens) {
        if (tok.kind == TokenKind::Keyword && control_words(language).count(tok.text) != 0) {
            seq.push_back(tok.text);
        }
    }
    seq.emplace_back(kFingerprintEnd);
    ControlFingerprint pairs;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        ++pairs[{seq[i], seq[i + 1]}];
    }
    return pairs;
}

bool is_reserved_word(const std::string& word, LanguageId language) {
    return reserved_words(language).count(word) != 0;
}

bool is_control_keyword(const std::string& word, LanguageId language) {
    return control_words(language).count(word) != 0;
}

}  // namespace roundtrip
