#include "agewatch/training.hpp"

#include "agewatch/error.hpp"

#include <cmath>

namespace agewatch {

void validate(const TrainConfig& config) {
    if (!(config.learning_rate > 0.0) || !std::isfinite(config.learning_rate)) {
        throw Error("learning rate must be positive and finite");
    }
    if (!(config.target_mse >= 0.0)) {
        throw Error("target_mse must be >= 0");
    }
}

} // namespace agewatch
