#include "hrs/isotonic.hpp"

#include <stdexcept>

namespace hrs {

std::vector<double> isotonic_non_increasing(const std::vector<double>& y,
                                            const std::vector<double>& w) {
    const std::size_t n = y.size();
    if (!w.empty() && w.size() != n) {
        throw std::invalid_argument("isotonic_non_increasing: weight length mismatch");
    }
    if (n == 0) return {};

    // PAV on the negated sequence (non-decreasing), block stack.
    struct Block {
        double sum, weight;
        std::size_t count;
    };
    std::vector<Block> blocks;
    blocks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w.empty() ? 1.0 : w[i];
        blocks.push_back({-y[i] * wi, wi, 1});
        while (blocks.size() > 1) {
            const Block& b = blocks.back();
            const Block& a = blocks[blocks.size() - 2];
            if (a.sum / a.weight <= b.sum / b.weight) break;
            Block merged{a.sum + b.sum, a.weight + b.weight, a.count + b.count};
            blocks.pop_back();
            blocks.back() = merged;
        }
    }
    std::vector<double> out;
    out.reserve(n);
    for (const Block& b : blocks) {
        const double level = -(b.sum / b.weight);
        for (std::size_t k = 0; k < b.count; ++k) out.push_back(level);
    }
    return out;
}

}  // namespace hrs
