#ifndef DYCKCHAINS_KERNELS_HPP
#define DYCKCHAINS_KERNELS_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include <dyckchains/path.hpp>

// Data-parallel inner loops of the exhaustive routes. Each kernel exists as a
// serial reference and an OpenMP version; tests require them to agree exactly.
namespace dyck {

enum class Execution { serial, parallel };

namespace kernels {

using IndexedTerm = std::function<mpz_class(std::size_t)>;

namespace serial {

// out[i] = sum of in[j] over the upper covers j of node i.
std::vector<mpz_class> propagate_covers(const PathIndex& index, const std::vector<mpz_class>& in);

// term(0) + ... + term(count - 1)
mpz_class sum_indexed(std::size_t count, const IndexedTerm& term);

} // namespace serial

namespace parallel {

std::vector<mpz_class> propagate_covers(const PathIndex& index, const std::vector<mpz_class>& in);

// Terms are evaluated concurrently and reduced in index order, so the result is
// independent of the thread schedule. `term` must be safe to call concurrently.
mpz_class sum_indexed(std::size_t count, const IndexedTerm& term);

int max_threads();

} // namespace parallel

inline std::vector<mpz_class> propagate_covers(Execution exec, const PathIndex& index,
                                               const std::vector<mpz_class>& in) {
    return exec == Execution::serial ? serial::propagate_covers(index, in)
                                     : parallel::propagate_covers(index, in);
}

inline mpz_class sum_indexed(Execution exec, std::size_t count, const IndexedTerm& term) {
    return exec == Execution::serial ? serial::sum_indexed(count, term)
                                     : parallel::sum_indexed(count, term);
}

} // namespace kernels
} // namespace dyck

#endif
