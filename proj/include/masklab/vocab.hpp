// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace masklab {

using TokenId = int32_t;
using TokenSeq = std::vector<TokenId>;

// Token vocabulary with four reserved ids (absorbing mask, pad, eos, bos) and a
// printable glyph per content id for character-level tasks.
struct Vocab {
    int size = 0;
    TokenId mask_id = 0;
    TokenId pad_id = 1;
    TokenId eos_id = 2;
    TokenId bos_id = 3;
    std::vector<std::string> glyphs;  // size entries; reserved ids use <...> names

    void validate() const {
        if (size < 6) throw std::invalid_argument("vocab: size must be at least 6");
        TokenId r[4] = {mask_id, pad_id, eos_id, bos_id};
        for (int i = 0; i < 4; ++i) {
            if (r[i] < 0 || r[i] >= size) throw std::invalid_argument("vocab: reserved id out of range");
            for (int j = i + 1; j < 4; ++j)
                if (r[i] == r[j]) throw std::invalid_argument("vocab: reserved ids must be distinct");
        }
        if (static_cast<int>(glyphs.size()) != size)
            throw std::invalid_argument("vocab: glyph table size mismatch");
    }

    bool is_reserved(TokenId id) const {
        return id == mask_id || id == pad_id || id == eos_id || id == bos_id;
    }

    std::string role(TokenId id) const {
        if (id == mask_id) return "mask";
        if (id == pad_id) return "pad";
        if (id == eos_id) return "eos";
        if (id == bos_id) return "bos";
        return "content";
    }

    TokenId id_of(char c) const {
        const std::string g(1, c);
        for (int i = 0; i < size; ++i)
            if (!is_reserved(i) && glyphs[i] == g) return i;
        throw std::invalid_argument(std::string("vocab: no token for character '") + c + "'");
    }

    // Character-level encoding of content text; throws on unmapped characters.
    TokenSeq encode(const std::string& text) const {
        TokenSeq out;
        out.reserve(text.size());
        for (char c : text) out.push_back(id_of(c));
        return out;
    }

    // Inverse of encode over content ids; reserved ids are dropped.
    std::string decode(const TokenSeq& ids) const {
        std::string out;
        for (TokenId id : ids) {
            if (id < 0 || id >= size) throw std::invalid_argument("vocab: id out of range in decode");
            if (!is_reserved(id)) out += glyphs[id];
        }
        return out;
    }
};

// Shared 64-symbol character vocabulary used by all built-in tasks.
inline Vocab default_vocab() {
    Vocab v;
    v.glyphs = {"<mask>", "<pad>", "<eos>", "<bos>"};
    const std::string content =
        "abcdefghijklmnopqrstuvwxyz"
        "0123456789"
        "ANS"
        ":,=+-*()"
        ". ;|#?!_/<>[]";
    for (char c : content) v.glyphs.emplace_back(1, c);
    v.size = static_cast<int>(v.glyphs.size());
    v.validate();
    if (v.size != 64) throw std::logic_error("default_vocab: expected 64 symbols");
    return v;
}

inline void save_vocab(const Vocab& v, const std::string& path) {
    v.validate();
    std::ofstream f(path);
    if (!f) throw std::runtime_error("save_vocab: cannot open " + path);
    f << "masklab-vocab v1 " << v.size << "\n";
    for (int i = 0; i < v.size; ++i) {
        std::string g = v.glyphs[i];
        if (g == " ") g = "<sp>";
        f << i << "\t" << g << "\t" << v.role(i) << "\n";
    }
    if (!f) throw std::runtime_error("save_vocab: write failed for " + path);
}

inline Vocab load_vocab(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_vocab: cannot open " + path);
    std::string magic, version;
    int size = 0;
    f >> magic >> version >> size;
    if (magic != "masklab-vocab" || version != "v1")
        throw std::runtime_error("load_vocab: unrecognized header in " + path);
    Vocab v;
    v.size = size;
    v.glyphs.assign(size, "");
    v.mask_id = v.pad_id = v.eos_id = v.bos_id = -1;
    std::string line;
    std::getline(f, line);  // consume end of header line
    for (int i = 0; i < size; ++i) {
        if (!std::getline(f, line)) throw std::runtime_error("load_vocab: truncated table");
        std::istringstream row(line);
        int id;
        std::string glyph, role;
        row >> id >> glyph >> role;
        if (!row || id != i) throw std::runtime_error("load_vocab: malformed row " + line);
        if (glyph == "<sp>") glyph = " ";
        v.glyphs[i] = glyph;
        if (role == "mask") v.mask_id = id;
        else if (role == "pad") v.pad_id = id;
        else if (role == "eos") v.eos_id = id;
        else if (role == "bos") v.bos_id = id;
    }
    v.validate();
    return v;
}

}  // namespace masklab
