#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "itskit/errors.hpp"

namespace itskit::bits {

/// Number of bits a constrained whole number in [lo, hi] occupies on the
/// wire: ceil(log2(hi - lo + 1)), zero for a singleton range.
std::size_t constrained_bit_width(std::int64_t lo, std::int64_t hi);

/// Growable bit sequence with a read cursor, bit order big-endian within
/// multi-bit fields as in ITU-T X.691 unaligned PER. Writing appends only;
/// reading never mutates the stored bits. Single-owner mutable value, not
/// safe for concurrent mutation.
class BitBuffer {
 public:
  BitBuffer() = default;

  /// Loads a received payload; the read cursor starts at bit 0.
  static BitBuffer from_bytes(std::span<const std::uint8_t> bytes);

  void write_bit(bool bit);

  /// Appends the lowest `count` bits of `value`, most significant first.
  void write_bits(std::uint64_t value, std::size_t count);

  /// X.691 constrained whole number: appends (value - lo) in
  /// constrained_bit_width(lo, hi) bits. Throws RangeViolation if value is
  /// outside [lo, hi].
  void write_constrained_int(std::int64_t value, std::int64_t lo, std::int64_t hi);

  /// X.691 general length determinant, unconstrained, n < 16384 only.
  /// Fragmented lengths are rejected with Unsupported.
  void write_length_determinant(std::size_t n);

  /// One presence bit per flag, in declared field order, 1 = present.
  void write_optional_flags(std::span<const bool> present);

  void write_octets(std::span<const std::uint8_t> octets);

  bool read_bit();
  std::uint64_t read_bits(std::size_t count);
  std::int64_t read_constrained_int(std::int64_t lo, std::int64_t hi);
  std::size_t read_length_determinant();
  std::vector<std::uint8_t> read_octets(std::size_t n);

  std::size_t bit_size() const { return bit_size_; }
  std::size_t cursor() const { return cursor_; }
  std::size_t remaining() const { return bit_size_ - cursor_; }

  /// True iff every bit from the cursor to the end is zero.
  bool remaining_is_zero() const;

  /// Packs the bits into octets, zero-padding the final partial octet.
  std::vector<std::uint8_t> to_bytes() const;

  bool bit_at(std::size_t index) const;

 private:
  void require(std::size_t count) const;

  std::vector<std::uint8_t> storage_;
  std::size_t bit_size_ = 0;
  std::size_t cursor_ = 0;
};

}  // namespace itskit::bits
