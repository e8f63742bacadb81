#ifndef DYCKCHAINS_LIMITS_HPP
#define DYCKCHAINS_LIMITS_HPP

namespace dyck {

// Caps for the exhaustive routes. Catalan(14) = 2,674,440 is about where a full
// Hasse diagram stops fitting comfortably in memory.
struct Limits {
    int max_n = 14;     // semilength for path generation / brute force
    int max_area = 6;   // skew-shape enumeration
    int max_h = 5;      // chain length for the decomposition formula
};

inline constexpr int kMaxClosedFormN = 200;
inline constexpr int kDefaultSeriesOrder = 20;
inline constexpr int kDefaultMaxSeriesN = 200;
// Dumps that keep q and y exact grow cubically per coefficient.
inline constexpr int kMaxExactDumpOrder = 40;

} // namespace dyck

#endif
