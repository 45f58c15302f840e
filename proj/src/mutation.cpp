#include "walg/mutation.hpp"

namespace walg {

std::string mutation_name(Mutation m) {
    switch (m) {
        case Mutation::None: return "none";
        case Mutation::AlphaQNegative: return "alpha_q_negative";
        case Mutation::AlphaPNegOddL: return "alpha_p_negative_odd_l";
        case Mutation::AlphaPNegEvenL: return "alpha_p_negative_even_l";
        case Mutation::AlphaPNonneg: return "alpha_p_nonnegative";
        case Mutation::OmegaPhiEntry: return "omega_phi_entry";
    }
    return "unknown";
}

}  // namespace walg
