// Deliberate single-sign corruptions used by the mutation-sensitivity checks:
// each one must make at least one verification suite fail somewhere on the
// default grid, guarding against vacuous passes.
#pragma once

#include <string>

namespace walg {

enum class Mutation {
    None,
    AlphaQNegative,   // flip the alpha case "1 if q < 0"
    AlphaPNegOddL,    // flip "phi (-1)^{q/2} if p < 0, q >= 0, l odd"
    AlphaPNegEvenL,   // flip "(-1)^{(q+1)/2} if p < 0, q > 0, l even"
    AlphaPNonneg,     // flip "(-1)^{(q-p)/2} if p >= 0"
    OmegaPhiEntry,    // flip the "-phi if p = q+2 = 0" entry of Omega(u)
};

std::string mutation_name(Mutation m);

}  // namespace walg
