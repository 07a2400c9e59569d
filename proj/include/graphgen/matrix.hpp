#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace graphgen {

// Dense row-major matrix of edge probabilities. Oracle-scale only: the fast
// samplers never materialize one of these.
struct ProbabilityMatrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<double> data;  // rows * cols, row-major

    ProbabilityMatrix() = default;
    ProbabilityMatrix(std::int64_t r, std::int64_t c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r * c), fill) {
        if (r < 1 || c < 1) throw std::domain_error("ProbabilityMatrix: empty shape");
    }

    double& at(std::int64_t i, std::int64_t j) {
        return data[static_cast<std::size_t>(i * cols + j)];
    }
    double at(std::int64_t i, std::int64_t j) const {
        return data[static_cast<std::size_t>(i * cols + j)];
    }

    void validate_probabilities() const {
        for (double v : data)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::domain_error("ProbabilityMatrix: entry outside [0, 1]");
    }
};

}  // namespace graphgen
