#include "spcls/connectivity.hpp"

#include <algorithm>

#include "spcls/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spcls {

namespace {

void check_cap(const ClosureSpace& cs, std::size_t cap) {
    if (cs.point_count() > cap)
        fail(Fault::cap_exceeded,
             "exhaustive subset enumeration over " + std::to_string(cs.point_count()) +
                 " points exceeds the cap of " + std::to_string(cap) + " (raise --cap)");
    if (cs.point_count() > 30)
        fail(Fault::cap_exceeded, "exhaustive subset enumeration is limited to 30 points");
}

// Induced family of m into 'scratch', sorted and deduplicated, then scan
// for a nontrivial clopen split.
bool connected_with_scratch(const std::vector<std::uint64_t>& family, std::uint64_t m,
                            std::vector<std::uint64_t>& scratch) {
    scratch.clear();
    for (std::uint64_t f : family) scratch.push_back(f & m);
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    for (std::uint64_t g : scratch) {
        if (g == 0 || g == m) continue;
        if (std::binary_search(scratch.begin(), scratch.end(), m ^ g)) return false;
    }
    return true;
}

}  // namespace

bool mask_connected(const std::vector<std::uint64_t>& family_masks, std::uint64_t m) {
    std::vector<std::uint64_t> scratch;
    scratch.reserve(family_masks.size());
    return connected_with_scratch(family_masks, m, scratch);
}

std::vector<std::uint8_t> connected_table_serial(const ClosureSpace& cs, std::size_t cap) {
    check_cap(cs, cap);
    const std::size_t n = cs.point_count();
    const auto family = cs.family_masks();
    std::vector<std::uint8_t> table(std::size_t(1) << n);

    std::vector<std::uint64_t> scratch;
    scratch.reserve(family.size());
    for (std::uint64_t m = 0; m < table.size(); ++m)
        table[m] = connected_with_scratch(family, m, scratch) ? 1 : 0;
    return table;
}

std::vector<std::uint8_t> connected_table_parallel(const ClosureSpace& cs, std::size_t cap) {
    check_cap(cs, cap);
    const std::size_t n = cs.point_count();
    const auto family = cs.family_masks();
    std::vector<std::uint8_t> table(std::size_t(1) << n);

#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::uint64_t> scratch;
        scratch.reserve(family.size());
#pragma omp for schedule(dynamic, 4096)
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(table.size()); ++m)
            table[m] = connected_with_scratch(family, static_cast<std::uint64_t>(m), scratch)
                           ? 1
                           : 0;
    }
#else
    std::vector<std::uint64_t> scratch;
    scratch.reserve(family.size());
    for (std::uint64_t m = 0; m < table.size(); ++m)
        table[m] = connected_with_scratch(family, m, scratch) ? 1 : 0;
#endif
    return table;
}

std::vector<std::uint8_t> connected_table(const ClosureSpace& cs, std::size_t cap) {
#ifdef _OPENMP
    // The table is embarrassingly parallel; below ~4k masks the fork/join
    // overhead dominates.
    if (cs.point_count() >= 12 && omp_get_max_threads() > 1)
        return connected_table_parallel(cs, cap);
#endif
    return connected_table_serial(cs, cap);
}

}  // namespace spcls
