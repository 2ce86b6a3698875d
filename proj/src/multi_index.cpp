#include "lagood/multi_index.hpp"

namespace lagood {

namespace {

void fill_compositions(int degree, size_t pos, std::vector<int>& scratch,
                       std::vector<MultiIndex>& out) {
    if (pos + 1 == scratch.size()) {
        scratch[pos] = degree;
        out.push_back(MultiIndex(scratch));
        return;
    }
    for (int v = 0; v <= degree; ++v) {
        scratch[pos] = v;
        fill_compositions(degree - v, pos + 1, scratch, out);
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(int var_count, int max_degree) {
    if (var_count < 1) throw std::invalid_argument("var_count must be positive");
    if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
    std::vector<MultiIndex> out;
    std::vector<int> scratch(static_cast<size_t>(var_count), 0);
    for (int d = 0; d <= max_degree; ++d) {
        fill_compositions(d, 0, scratch, out);
    }
    return out;
}

}  // namespace lagood
