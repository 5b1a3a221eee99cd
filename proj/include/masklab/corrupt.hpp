// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

#include "masklab/schedule.hpp"
#include "masklab/sequence.hpp"
#include "masklab/vocab.hpp"

namespace masklab {

// Corrupts positions [begin, end): each independently becomes mask_id with
// probability 1 - alpha(t). Exactly one uniform draw is consumed per position,
// in ascending position order, so serial and fan-out callers agree bit-exactly.
inline MaskedState corrupt_span(const TokenSeq& x0, size_t begin, size_t end, double t,
                                const NoiseSchedule& sched, RngStream& rng, const Vocab& vocab) {
    if (begin > end || end > x0.size()) throw std::domain_error("corrupt_span: bad span");
    const double keep = schedule_alpha(sched, t);
    MaskedState s{x0};
    for (size_t i = begin; i < end; ++i) {
        if (x0[i] == vocab.mask_id)
            throw std::invalid_argument("corrupt: input already contains mask_id");
        if (rng.uniform() >= keep) s.ids[i] = vocab.mask_id;
    }
    return s;
}

inline MaskedState corrupt(const TokenSeq& x0, double t, const NoiseSchedule& sched,
                           RngStream& rng, const Vocab& vocab) {
    if (contains_token(x0, vocab.mask_id))
        throw std::invalid_argument("corrupt: input already contains mask_id");
    return corrupt_span(x0, 0, x0.size(), t, sched, rng, vocab);
}

// Number of length-block_len blocks covering a length-n sequence (last block
// may be ragged).
inline int num_blocks(size_t n, int block_len) {
    if (block_len < 1) throw std::domain_error("num_blocks: block_len must be positive");
    return static_cast<int>((n + block_len - 1) / block_len);
}

// Corrupts only block `block` (0-based) of x0; earlier blocks stay clean and
// later blocks are untouched (how they are hidden from the model is the loss
// term's concern).
inline MaskedState corrupt_block(const TokenSeq& x0, int block, int block_len, double t,
                                 const NoiseSchedule& sched, RngStream& rng, const Vocab& vocab) {
    const int nb = num_blocks(x0.size(), block_len);
    if (block < 0 || block >= nb) throw std::domain_error("corrupt_block: block index out of range");
    const size_t begin = static_cast<size_t>(block) * block_len;
    const size_t end = std::min(x0.size(), begin + static_cast<size_t>(block_len));
    return corrupt_span(x0, begin, end, t, sched, rng, vocab);
}

}  // namespace masklab
