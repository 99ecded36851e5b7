#pragma once

#include "roundtrip/lexer.hpp"

namespace roundtrip {

struct SimilarityScore {
    double value{0.0};  // always in [0,1]
};

// Relative weight of the canonical-token bigram score vs the control-flow
// fingerprint score. Must sum to 1 for scores to stay in [0,1].
struct SimWeights {
    double token_weight{0.5};
    double control_weight{0.5};
};

// Multiset Dice coefficient over adjacent-symbol bigrams of two canonical
// streams: 2|A^B| / (|A|+|B|) with min-count intersection. Streams shorter
// than 2 symbols contribute an empty bigram multiset. Empty vs empty is 1,
// empty vs non-empty is 0.
double dice_bigrams(const CanonicalStream& a, const CanonicalStream& b);

// Min/max-count multiset Jaccard with the same empty conventions.
double jaccard_multiset(const ControlFingerprint& a, const ControlFingerprint& b);

// Structural similarity in [0,1]: weighted blend of the bigram Dice score and
// the control-fingerprint Jaccard score. Symmetric and deterministic.
// Throws LanguageMismatch if the snippets carry different languages.
SimilarityScore similarity(const CodeSnippet& original, const CodeSnippet& candidate,
                           const SimWeights& weights = {});

}  // namespace roundtrip
