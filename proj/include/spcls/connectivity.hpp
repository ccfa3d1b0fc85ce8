#pragma once

#include <cstdint>
#include <vector>

#include "spcls/closure_space.hpp"

namespace spcls {

/// Connectivity of the induced subspace for every subset of the points,
/// indexed by bit mask: table[m] != 0 iff the subspace on m is connected.
/// This is the memo table behind component computation; the enumeration is
/// 2^n, guarded by 'cap' (throws cap_exceeded when point_count() > cap).
///
/// The serial variant is the reference implementation; the parallel one
/// splits the mask range across OpenMP threads and must produce an
/// identical table. connected_table() dispatches on problem size.
std::vector<std::uint8_t> connected_table_serial(const ClosureSpace& cs, std::size_t cap);
std::vector<std::uint8_t> connected_table_parallel(const ClosureSpace& cs, std::size_t cap);
std::vector<std::uint8_t> connected_table(const ClosureSpace& cs, std::size_t cap);

/// Connectivity of one induced subspace, computed directly on masks
/// without building the full table.
bool mask_connected(const std::vector<std::uint64_t>& family_masks, std::uint64_t m);

}  // namespace spcls
