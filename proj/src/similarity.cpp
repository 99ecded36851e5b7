#include "roundtrip/similarity.hpp"

#include <algorithm>
#include <map>

#include "roundtrip/errors.hpp"

namespace roundtrip {

namespace {

using BigramCounts = std::map<std::pair<std::string, std::string>, int>;

BigramCounts count_bigrams(const CanonicalStream& stream) {
    BigramCounts counts;
    const auto& s = stream.symbols;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        ++counts[{s[i], s[i + 1]}];
    }
    return counts;
}

template <typename Key>
long intersection_size(const std::map<Key, int>& a, const std::map<Key, int>& b) {
    long total = 0;
    for (const auto& [key, count] : a) {
        auto it = b.find(key);
        if (it != b.end()) total += std::min(count, it->second);
    }
    return total;
}

template <typename Key>
long multiset_size(const std::map<Key, int>& m) {
    long total = 0;
    for (const auto& [key, count] : m) total += count;
    return total;
}

}  // namespace

double dice_bigrams(const CanonicalStream& a, const CanonicalStream& b) {
    const BigramCounts ca = count_bigrams(a);
    const BigramCounts cb = count_bigrams(b);
    const long na = multiset_size(ca);
    const long nb = multiset_size(cb);
    if (na == 0 && nb == 0) return 1.0;
    if (na == 0 || nb == 0) return 0.0;
    return 2.0 * static_cast<double>(intersection_size(ca, cb)) / static_cast<double>(na + nb);
}

double jaccard_multiset(const ControlFingerprint& a, const ControlFingerprint& b) {
    const long na = multiset_size(a);
    const long nb = multiset_size(b);
    if (na == 0 && nb == 0) return 1.0;
    if (na == 0 || nb == 0) return 0.0;
    const long inter = intersection_size(a, b);
    const long uni = na + nb - inter;  // |A v B| with max counts
    return static_cast<double>(inter) / static_cast<double>(uni);
}

SimilarityScore similarity(const CodeSnippet& original, const CodeSnippet& candidate,
                           const SimWeights& weights) {
    if (original.language != candidate.language) {
        throw LanguageMismatch("similarity() requires snippets of the same language");
    }
    const LanguageId lang = original.language;
    const auto tokens_a = tokenize(original.source, lang);
    const auto tokens_b = tokenize(candidate.source, lang);
    const double token_score = dice_bigrams(canonicalize(tokens_a), canonicalize(tokens_b));
    const double control_score =
        jaccard_multiset(control_fingerprint(tokens_a, lang), control_fingerprint(tokens_b, lang));
    return SimilarityScore{weights.token_weight * token_score +
                           weights.control_weight * control_score};
}

}  // namespace roundtrip
