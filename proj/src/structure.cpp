#include "rnaforge/structure.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "rnaforge/errors.hpp"

namespace rnaforge {

Structure parse_structure(const std::string& text, int h_min) {
    if (text.empty())
        throw Error(ErrorCode::InvalidArgument, "empty structure text");
    if (h_min < 0)
        throw Error(ErrorCode::InvalidArgument, "h_min must be >= 0");

    Structure y;
    y.text = text;
    const int n = static_cast<int>(text.size());
    y.partner.assign(static_cast<size_t>(n), -1);

    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        char c = text[static_cast<size_t>(i)];
        if (c == '(') {
            stack.push_back(i);
        } else if (c == ')') {
            if (stack.empty())
                throw Error(ErrorCode::UnbalancedBrackets,
                            "unmatched ')' at position " + std::to_string(i));
            int j = stack.back();
            stack.pop_back();
            if (i - j <= h_min)
                throw Error(ErrorCode::HairpinTooSmall,
                            "pair (" + std::to_string(j) + "," + std::to_string(i) +
                                ") violates j-i > " + std::to_string(h_min));
            y.partner[static_cast<size_t>(j)] = i;
            y.partner[static_cast<size_t>(i)] = j;
            y.pairs.emplace_back(j, i);
        } else if (c != '.') {
            throw Error(ErrorCode::IllegalCharacter,
                        std::string("illegal character '") + c + "' at position " +
                            std::to_string(i));
        }
    }
    if (!stack.empty())
        throw Error(ErrorCode::UnbalancedBrackets,
                    "unmatched '(' at position " + std::to_string(stack.back()));

    std::sort(y.pairs.begin(), y.pairs.end());
    for (int i = 0; i < n; ++i)
        if (y.partner[static_cast<size_t>(i)] < 0) y.unpaired.push_back(i);
    return y;
}

int d_struct(const Structure& y, const Structure& y2) {
    if (y.length() != y2.length())
        throw Error(ErrorCode::LengthMismatch,
                    "d_struct requires equal lengths (" + std::to_string(y.length()) +
                        " vs " + std::to_string(y2.length()) + ")");
    int shared_pairs = 0;
    for (const auto& [i, j] : y.pairs)
        if (y2.partner[static_cast<size_t>(i)] == j) ++shared_pairs;
    int shared_unpaired = 0;
    for (int i : y.unpaired)
        if (!y2.is_paired(i)) ++shared_unpaired;
    return y.length() - 2 * shared_pairs - shared_unpaired;
}

int d_edit(const std::string& y, const std::string& y2) {
    constexpr size_t kMaxLen = 2000;
    if (y.size() > kMaxLen || y2.size() > kMaxLen)
        throw Error(ErrorCode::TooLong, "d_edit inputs capped at 2000 chars");
    const size_t m = y.size(), n = y2.size();
    if (m == 0) return static_cast<int>(n);
    if (n == 0) return static_cast<int>(m);

    // two-row DP
    std::vector<int> row(n + 1);
    std::iota(row.begin(), row.end(), 0);
    for (size_t i = 1; i <= m; ++i) {
        int diag = row[0];
        row[0] = static_cast<int>(i);
        for (size_t j = 1; j <= n; ++j) {
            int up = row[j];
            int sub = diag + (y[i - 1] == y2[j - 1] ? 0 : 1);
            row[j] = std::min({sub, up + 1, row[j - 1] + 1});
            diag = up;
        }
    }
    return row[n];
}

double d_min_norm(const Structure& y, const StructureSet& testset) {
    if (testset.empty())
        throw Error(ErrorCode::EmptyTestSet, "d_min_norm over an empty test set");
    double best = std::numeric_limits<double>::infinity();
    for (const Structure& t : testset.items) {
        int d = d_edit(y.text, t.text);
        int denom = std::min(y.length(), t.length());
        best = std::min(best, static_cast<double>(d) / static_cast<double>(denom));
        if (best == 0.0) break;
    }
    return best;
}

bool is_valid_design(const Sequence& x, const Structure& y) {
    if (x.length() != y.length()) return false;
    for (const auto& [i, j] : y.pairs)
        if (!pairable(x.code_at(i), x.code_at(j))) return false;
    return true;
}

BigInt design_space_size(const Structure& y) {
    BigInt six = 6, four = 4;
    return boost::multiprecision::pow(six, static_cast<unsigned>(y.pairs.size())) *
           boost::multiprecision::pow(four, static_cast<unsigned>(y.unpaired.size()));
}

void StructureSet::dedup() {
    std::unordered_set<std::string> seen;
    std::vector<Structure> kept;
    kept.reserve(items.size());
    for (auto& y : items)
        if (seen.insert(y.text).second) kept.push_back(std::move(y));
    items = std::move(kept);
}

StructureSet load_structure_file(const std::string& path, int h_min) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    StructureSet set;
    set.source_tag = path;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                 line.back() == '\t' || line.back() == '\n'))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            set.items.push_back(parse_structure(line, h_min));
        } catch (const Error& e) {
            throw Error(e.code(), path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return set;
}

void save_structure_file(const std::string& path, const StructureSet& set) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    for (const Structure& y : set.items) out << y.text << "\n";
}

}  // namespace rnaforge
