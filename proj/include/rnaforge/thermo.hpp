#pragma once

#include <string>

#include "rnaforge/sequence.hpp"
#include "rnaforge/structure.hpp"

namespace rnaforge {

// Simplified nearest-neighbor energy model: a per-pair term plus a stacking
// bonus when two pairs are directly adjacent. All energies are integers in
// deci-kcal/mol so ties are exact and co-optimal counting is well-defined.
struct EnergyParams {
    // indexed by [nuc][nuc]; only the six allowed pairs are meaningful
    int e_pair[4][4];
    int e_stack;
    int h_min;
    double rt_deci;  // RT in deci-kcal/mol (default 6.1633, i.e. 37 C)

    EnergyParams();

    int pair_energy(int a, int b) const { return e_pair[a][b]; }
};

// Parameter file: one directive per line, '#' comments.
//   pair <XY> <int deci-kcal>   stack <int>   hmin <int>   rt <kcal/mol>
EnergyParams load_params(const std::string& path);
EnergyParams parse_params_text(const std::string& text, const std::string& origin = "<string>");

// ΔG(x, y) in deci-kcal/mol. Open chain is 0 by convention.
// Throws InvalidDesign if some pair of y is not allowed under x.
int energy(const Sequence& x, const Structure& y, const EnergyParams& p);

}  // namespace rnaforge
