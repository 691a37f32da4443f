#pragma once

#include <array>
#include <string>

#include "rnaforge/errors.hpp"

namespace rnaforge {

// Nucleotide codes 0..3 in the fixed order A, C, G, U.
enum Nuc : int { NUC_A = 0, NUC_C = 1, NUC_G = 2, NUC_U = 3 };

inline char nuc_char(int n) {
    static constexpr char kChars[4] = {'A', 'C', 'G', 'U'};
    return kChars[n];
}

inline int nuc_code(char c) {
    switch (c) {
        case 'A': return NUC_A;
        case 'C': return NUC_C;
        case 'G': return NUC_G;
        case 'U': return NUC_U;
        default: return -1;
    }
}

// An RNA sequence over {A, C, G, U}.
struct Sequence {
    std::string text;

    Sequence() = default;
    explicit Sequence(std::string t) : text(std::move(t)) {
        for (char c : text) {
            if (nuc_code(c) < 0)
                throw Error(ErrorCode::IllegalCharacter,
                            std::string("not a nucleotide: '") + c + "'");
        }
    }

    int length() const { return static_cast<int>(text.size()); }
    int code_at(int i) const { return nuc_code(text[static_cast<size_t>(i)]); }
};

// The six allowed base pairs: CG, GC, AU, UA, GU, UG.
inline bool pairable(int a, int b) {
    static constexpr bool kTable[4][4] = {
        // A      C      G      U
        {false, false, false, true},   // A
        {false, false, true, false},   // C
        {false, true, false, true},    // G
        {true, false, true, false},    // U
    };
    return kTable[a][b];
}

inline bool pairable_chars(char a, char b) {
    int ca = nuc_code(a), cb = nuc_code(b);
    return ca >= 0 && cb >= 0 && pairable(ca, cb);
}

}  // namespace rnaforge
