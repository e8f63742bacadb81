#include <dyckchains/kernels.hpp>

#include <cstdint>

#include <omp.h>

namespace dyck::kernels::parallel {

std::vector<mpz_class> propagate_covers(const PathIndex& index, const std::vector<mpz_class>& in) {
    const auto count = static_cast<std::int64_t>(index.size());
    std::vector<mpz_class> out(index.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        mpz_class acc = 0;
        index.for_each_cover(static_cast<std::size_t>(i), [&](std::size_t j) { acc += in[j]; });
        out[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

mpz_class sum_indexed(std::size_t count, const IndexedTerm& term) {
    const auto n = static_cast<std::int64_t>(count);
    std::vector<mpz_class> terms(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        terms[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
    }
    mpz_class total = 0;
    for (const auto& t : terms) {
        total += t;
    }
    return total;
}

int max_threads() { return omp_get_max_threads(); }

} // namespace dyck::kernels::parallel
