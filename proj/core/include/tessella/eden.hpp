#pragma once

#include <cstdint>

#include "tessella/polyomino.hpp"

namespace tessella {

// Random connected region of exactly n cells, grown by repeatedly attaching a
// uniformly chosen boundary cell. Deterministic for a given (n, seed): the
// raw mt19937_64 stream is reduced by modulo, so no library-defined
// distribution is involved.
Polyomino eden_region(std::size_t n, std::uint64_t seed);

}  // namespace tessella
