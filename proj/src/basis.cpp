#include "sosrank/basis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sosrank {

namespace {

ProductBasis build(int vars, int degree) {
    ProductBasis b;
    b.vars = vars;
    b.degree = degree;
    b.lo = enumerate_multiindices(vars, degree);
    b.hi = enumerate_multiindices(vars, degree + 1);
    if (b.lo.size() > 64 || b.hi.size() > 64)
        throw std::invalid_argument("ProductBasis: basis exceeds 64 monomials");

    const auto index_of = [](const std::vector<MultiIndex>& basis, const MultiIndex& m) {
        const auto it = std::lower_bound(basis.begin(), basis.end(), m);
        return static_cast<int>(it - basis.begin());
    };

    b.up.assign(b.lo.size(), std::vector<int>(static_cast<std::size_t>(vars), -1));
    b.up_mask.assign(b.lo.size(), 0);
    b.down.assign(b.hi.size(), {});
    for (std::size_t i = 0; i < b.lo.size(); ++i) {
        for (int j = 0; j < vars; ++j) {
            const int a = index_of(b.hi, b.lo[i].plus_unit(j));
            b.up[i][static_cast<std::size_t>(j)] = a;
            b.up_mask[i] |= 1ull << a;
            b.down[static_cast<std::size_t>(a)].emplace_back(static_cast<int>(i), j);
        }
    }

    b.adjacency.assign(b.lo.size(), 0);
    for (std::size_t i = 0; i < b.lo.size(); ++i)
        for (std::size_t k = i + 1; k < b.lo.size(); ++k)
            if (b.up_mask[i] & b.up_mask[k]) {
                b.adjacency[i] |= 1ull << k;
                b.adjacency[k] |= 1ull << i;
            }

    b.lo_var_zero.assign(static_cast<std::size_t>(vars), 0);
    for (std::size_t i = 0; i < b.lo.size(); ++i)
        for (int j = 0; j < vars; ++j)
            if (b.lo[i][j] == 0) b.lo_var_zero[static_cast<std::size_t>(j)] |= 1ull << i;

    return b;
}

}  // namespace

int ProductBasis::lo_index(const MultiIndex& m) const {
    const auto it = std::lower_bound(lo.begin(), lo.end(), m);
    if (it == lo.end() || !(*it == m)) throw std::invalid_argument("lo_index: not in basis");
    return static_cast<int>(it - lo.begin());
}

int ProductBasis::hi_index(const MultiIndex& m) const {
    const auto it = std::lower_bound(hi.begin(), hi.end(), m);
    if (it == hi.end() || !(*it == m)) throw std::invalid_argument("hi_index: not in basis");
    return static_cast<int>(it - hi.begin());
}

const ProductBasis& ProductBasis::get(int vars, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ProductBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{vars, degree}];
    if (!slot) slot = std::make_unique<ProductBasis>(build(vars, degree));
    return *slot;
}

}  // namespace sosrank
