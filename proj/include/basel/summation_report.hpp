#pragma once

#include <string>

#include "basel/bigfloat.hpp"

namespace basel {

enum class Acceleration { none, pair_telescoping, tail_correction, alternating_transform };

std::string to_string(Acceleration a);

/// Provenance of a numeric series estimate. The residual bound is rigorous
/// for tail-corrected summation and an empirical estimate otherwise;
/// `residual_is_rigorous` keeps the two honest.
struct SummationReport {
    long terms_used = 0;
    Acceleration acceleration = Acceleration::none;
    int correction_order = 0;
    BigFloat residual_bound{64};
    bool residual_is_rigorous = false;
};

} // namespace basel
