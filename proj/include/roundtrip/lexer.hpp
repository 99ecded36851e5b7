#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace roundtrip {

enum class LanguageId { Python, Ruby, Go };

const char* language_name(LanguageId lang);           // "python", "ruby", "go"
LanguageId language_from_name(const std::string& s);  // throws UnsupportedLanguage

// The unit the whole pipeline revolves around: source text plus language.
struct CodeSnippet {
    std::string source;
    LanguageId language{LanguageId::Python};
};

enum class TokenKind { Keyword, Identifier, NumberLiteral, StringLiteral, Operator, Punct };

// text is the raw lexeme (string literals keep their quotes), so a token
// sequence joined with spaces re-lexes to the same sequence.
struct Token {
    TokenKind kind;
    std::string text;

    bool operator==(const Token&) const = default;
};

// Canonical symbol stream: identifiers become ID0, ID1, ... in first-occurrence
// order, number literals fold to NUM, strings to STR; everything else verbatim.
struct CanonicalStream {
    std::vector<std::string> symbols;

    bool operator==(const CanonicalStream&) const = default;
};

// Multiset of adjacent control-keyword pairs, sentinel-wrapped. Counting map
// so intersection/union by min/max counts is direct.
using ControlFingerprint = std::map<std::pair<std::string, std::string>, int>;

inline constexpr const char* kFingerprintStart = "<S>";
inline constexpr const char* kFingerprintEnd = "<E>";

// Tolerant longest-match lexer: comments and whitespace dropped, string
// literals captured whole, unknown bytes emitted as Punct. Never throws.
std::vector<Token> tokenize(const std::string& source, LanguageId language);

CanonicalStream canonicalize(const std::vector<Token>& tokens);

ControlFingerprint control_fingerprint(const std::vector<Token>& tokens, LanguageId language);

bool is_reserved_word(const std::string& word, LanguageId language);
bool is_control_keyword(const std::string& word, LanguageId language);

}  // namespace roundtrip
