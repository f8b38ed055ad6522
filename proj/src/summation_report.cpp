#include "basel/summation_report.hpp"

namespace basel {

std::string to_string(Acceleration a) {
    switch (a) {
        case Acceleration::none: return "none";
        case Acceleration::pair_telescoping: return "pair_telescoping";
        case Acceleration::tail_correction: return "tail_correction";
        case Acceleration::alternating_transform: return "alternating_transform";
    }
    return "?";
}

} // namespace basel
