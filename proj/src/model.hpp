#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "polynomial.hpp"

namespace saw {

enum class Model { crossing, directed, nes, untrapped };

const char* model_name(Model m);
std::optional<Model> model_from_string(const std::string& s);

// Exact record of the probability of one sampled walk. Every choice is
// uniform over an eligible set of size 1..4, so p = 2^-a 3^-b where a
// counts the power of two (a size-4 set contributes two) and b the
// size-3 sets. per_step keeps the raw sizes for rendering and replay.
struct ProbTrace {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::vector<std::uint8_t> per_step;

    void record(unsigned n_eligible);
    BigInt inv_p() const;  // 2^a 3^b
    double log10_inv_p() const;
};

struct Sample {
    Walk walk;
    ProbTrace trace;
    Model model = Model::crossing;
};

}  // namespace saw
