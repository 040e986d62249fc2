#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "sure/questionnaire.hpp"

namespace sure {

// Synthetic response CSV with `participants` rows of uniformly drawn levels.
//
// Generator: std::mt19937_64 seeded with `seed` (the single-integer seeding
// defined by the C++ standard). Draws happen row by row, questions in
// questionnaire order, and each level is `engine() % L`. Participant ids are
// "P" followed by the 1-based row number zero-padded to the digit count of
// `participants`. Lines end in LF. Any implementation following these rules
// reproduces the bytes exactly.
//
// Throws Error("invalid_argument") when participants is zero.
std::string simulate_responses(const Questionnaire& q, std::size_t participants,
                               std::uint64_t seed);

}  // namespace sure
