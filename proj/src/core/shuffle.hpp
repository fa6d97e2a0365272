#ifndef SHUFL_CORE_SHUFFLE_HPP
#define SHUFL_CORE_SHUFFLE_HPP

#include <cstdint>
#include <stdexcept>

#include "core/lincomb.hpp"
#include "core/words.hpp"

namespace shufl {

/// Thrown when a product would have more than `cap` interleavings
/// (predicted term mass C(m+n, m), checked before any enumeration).
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultTermCap = 10'000'000;

/// Shuffle product by direct enumeration of all C(m+n, m) order-preserving
/// interleavings. The reference engine: everything else is checked
/// against it.
LinComb shuffle_brute(const Word& a, const Word& b, std::uint64_t cap = kDefaultTermCap);

/// Shuffle product by the pivot recursion: fix position k of `a`, split
/// `b` at every cut i and recurse on the four sub-shuffles around the
/// pivot letter. Equal to shuffle_brute for every legal pivot.
/// Requires a nonempty and 1 <= k <= |a|.
LinComb shuffle_pivot(const Word& a, const Word& b, std::size_t pivot);

/// Shuffle product on run-length encodings: recursion at the last letter
/// of the first block, with equal-letter single-block pairs closed out by
/// a binomial. Memoized on (sub-blockword, sub-blockword) pairs.
LinComb shuffle_blocks(const BlockWord& a, const BlockWord& b,
                       std::uint64_t cap = kDefaultTermCap);

}  // namespace shufl

#endif
