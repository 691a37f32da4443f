#include "rnaforge/thermo.hpp"

#include <fstream>
#include <sstream>

#include "rnaforge/errors.hpp"

namespace rnaforge {

EnergyParams::EnergyParams() {
    for (auto& row : e_pair)
        for (int& v : row) v = 0;
    // Defaults keep Watson-Crick-Franklin > wobble ordering:
    // CG/GC -3.0, AU/UA -2.0, GU/UG -1.0, stack -1.0 kcal/mol.
    e_pair[NUC_C][NUC_G] = e_pair[NUC_G][NUC_C] = -30;
    e_pair[NUC_A][NUC_U] = e_pair[NUC_U][NUC_A] = -20;
    e_pair[NUC_G][NUC_U] = e_pair[NUC_U][NUC_G] = -10;
    e_stack = -10;
    h_min = kDefaultHairpinMin;
    rt_deci = 6.1633;
}

EnergyParams parse_params_text(const std::string& text, const std::string& origin) {
    EnergyParams p;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    auto fail = [&](ErrorCode code, const std::string& msg) -> Error {
        return Error(code, origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "pair") {
            std::string pr;
            long long v;
            if (!(ls >> pr >> v))
                throw fail(ErrorCode::ParseError, "expected: pair <XY> <int>");
            if (pr.size() != 2 || !pairable_chars(pr[0], pr[1]))
                throw fail(ErrorCode::MissingPairType, "'" + pr + "' is not one of the six pair types");
            p.e_pair[nuc_code(pr[0])][nuc_code(pr[1])] = static_cast<int>(v);
        } else if (key == "stack") {
            long long v;
            if (!(ls >> v)) throw fail(ErrorCode::ParseError, "expected: stack <int>");
            p.e_stack = static_cast<int>(v);
        } else if (key == "hmin") {
            long long v;
            if (!(ls >> v) || v < 0) throw fail(ErrorCode::ParseError, "expected: hmin <int >= 0>");
            p.h_min = static_cast<int>(v);
        } else if (key == "rt") {
            double v;
            if (!(ls >> v) || !(v > 0.0)) throw fail(ErrorCode::ParseError, "expected: rt <kcal/mol > 0>");
            p.rt_deci = v * 10.0;
        } else {
            throw fail(ErrorCode::UnknownKey, "unknown directive '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) throw fail(ErrorCode::ParseError, "trailing token '" + extra + "'");
    }
    return p;
}

EnergyParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_params_text(ss.str(), path);
}

int energy(const Sequence& x, const Structure& y, const EnergyParams& p) {
    if (x.length() != y.length())
        throw Error(ErrorCode::InvalidDesign, "sequence/structure length mismatch");
    long long total = 0;
    for (const auto& [i, j] : y.pairs) {
        int a = x.code_at(i), b = x.code_at(j);
        if (!pairable(a, b))
            throw Error(ErrorCode::InvalidDesign,
                        std::string("pair (") + std::to_string(i) + "," + std::to_string(j) +
                            ") = " + nuc_char(a) + nuc_char(b) + " is not allowed");
        total += p.e_pair[a][b];
        // stack bonus when the enclosed neighbor (i+1, j-1) is also a pair of y
        if (i + 1 < j - 1 && y.partner[static_cast<size_t>(i) + 1] == j - 1)
            total += p.e_stack;
    }
    return static_cast<int>(total);
}

}  // namespace rnaforge
