#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "rnaforge/sequence.hpp"

namespace rnaforge {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kDefaultHairpinMin = 3;

// A validated pseudoknot-free secondary structure in dot-bracket notation.
// Immutable after parse_structure; indices are 0-based throughout.
struct Structure {
    std::string text;
    std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, sorted by i
    std::vector<int> unpaired;               // ascending
    std::vector<int> partner;                // partner[i] = j for paired i, -1 otherwise

    int length() const { return static_cast<int>(text.size()); }
    bool is_paired(int i) const { return partner[i] >= 0; }
};

// Ordered collection of structures, e.g. a test set or training corpus.
struct StructureSet {
    std::vector<Structure> items;
    std::string source_tag;

    size_t size() const { return items.size(); }
    bool empty() const { return items.empty(); }

    // Removes later duplicates by exact text equality, keeping first
    // occurrences in order.
    void dedup();
};

// Single stack pass over the dot-bracket text.
// Throws UnbalancedBrackets, IllegalCharacter, HairpinTooSmall.
Structure parse_structure(const std::string& text, int h_min = kDefaultHairpinMin);

// |y| - 2*|pairs(y) ∩ pairs(y2)| - |unpaired(y) ∩ unpaired(y2)|
int d_struct(const Structure& y, const Structure& y2);

// Levenshtein distance with unit costs; inputs capped at 2000 chars.
int d_edit(const std::string& y, const std::string& y2);

// min over the test set of d_edit(y, y') / min(|y|, |y'|)
double d_min_norm(const Structure& y, const StructureSet& testset);

// True iff |x| = |y| and every target pair is Watson-Crick-Franklin or wobble.
bool is_valid_design(const Sequence& x, const Structure& y);

// 6^|pairs| * 4^|unpaired|
BigInt design_space_size(const Structure& y);

// Structure list file: one dot-bracket per line, '#' comments ignored.
StructureSet load_structure_file(const std::string& path, int h_min = kDefaultHairpinMin);
void save_structure_file(const std::string& path, const StructureSet& set);

}  // namespace rnaforge
