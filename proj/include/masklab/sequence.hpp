// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "masklab/vocab.hpp"

namespace masklab {

// A (possibly) corrupted sequence. The masked-position set is always derived
// from the ids themselves; there is no separate flag array to fall out of sync.
struct MaskedState {
    TokenSeq ids;

    size_t length() const { return ids.size(); }
};

inline std::vector<int> masked_positions(const MaskedState& s, TokenId mask_id) {
    std::vector<int> out;
    for (size_t i = 0; i < s.ids.size(); ++i)
        if (s.ids[i] == mask_id) out.push_back(static_cast<int>(i));
    return out;
}

inline bool contains_token(const TokenSeq& ids, TokenId id) {
    for (TokenId t : ids)
        if (t == id) return true;
    return false;
}

// Number of positions that carry signal: everything up to and including the
// first eos. Positions after the first eos are padding/garbage and are ignored
// by losses and likelihood estimators.
inline size_t effective_len(const TokenSeq& ids, TokenId eos_id) {
    for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == eos_id) return i + 1;
    return ids.size();
}

inline TokenSeq concat(const TokenSeq& a, const TokenSeq& b) {
    TokenSeq out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline void check_ids_in_range(const TokenSeq& ids, int vocab_size) {
    for (TokenId t : ids)
        if (t < 0 || t >= vocab_size) throw std::invalid_argument("token id out of vocabulary range");
}

}  // namespace masklab
