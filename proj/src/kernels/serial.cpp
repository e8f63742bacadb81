#include <dyckchains/kernels.hpp>

namespace dyck::kernels::serial {

std::vector<mpz_class> propagate_covers(const PathIndex& index, const std::vector<mpz_class>& in) {
    std::vector<mpz_class> out(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        mpz_class acc = 0;
        index.for_each_cover(i, [&](std::size_t j) { acc += in[j]; });
        out[i] = std::move(acc);
    }
    return out;
}

mpz_class sum_indexed(std::size_t count, const IndexedTerm& term) {
    mpz_class total = 0;
    for (std::size_t i = 0; i < count; ++i) {
        total += term(i);
    }
    return total;
}

} // namespace dyck::kernels::serial
