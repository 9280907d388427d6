#include "itskit/bits/bit_buffer.hpp"

#include <bit>

namespace itskit::bits {

std::size_t constrained_bit_width(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(Errc::range_violation, "empty range: lo > hi");
  }
  const auto range_minus_one = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  return static_cast<std::size_t>(std::bit_width(range_minus_one));
}

BitBuffer BitBuffer::from_bytes(std::span<const std::uint8_t> bytes) {
  BitBuffer buf;
  buf.storage_.assign(bytes.begin(), bytes.end());
  buf.bit_size_ = bytes.size() * 8;
  return buf;
}

void BitBuffer::write_bit(bool bit) {
  const std::size_t byte_index = bit_size_ / 8;
  if (byte_index == storage_.size()) {
    storage_.push_back(0);
  }
  if (bit) {
    storage_[byte_index] |= static_cast<std::uint8_t>(0x80u >> (bit_size_ % 8));
  }
  ++bit_size_;
}

void BitBuffer::write_bits(std::uint64_t value, std::size_t count) {
  for (std::size_t i = count; i-- > 0;) {
    write_bit(((value >> i) & 1u) != 0);
  }
}

void BitBuffer::write_constrained_int(std::int64_t value, std::int64_t lo, std::int64_t hi) {
  if (value < lo || value > hi) {
    throw Error(Errc::range_violation,
                "value " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  const auto offset = static_cast<std::uint64_t>(value) - static_cast<std::uint64_t>(lo);
  write_bits(offset, constrained_bit_width(lo, hi));
}

void BitBuffer::write_length_determinant(std::size_t n) {
  if (n < 128) {
    write_bit(false);
    write_bits(n, 7);
  } else if (n < 16384) {
    write_bit(true);
    write_bit(false);
    write_bits(n, 14);
  } else {
    throw Error(Errc::unsupported, "length determinant >= 16384 (fragmentation not supported)");
  }
}

void BitBuffer::write_optional_flags(std::span<const bool> present) {
  for (bool flag : present) {
    write_bit(flag);
  }
}

void BitBuffer::write_octets(std::span<const std::uint8_t> octets) {
  for (std::uint8_t octet : octets) {
    write_bits(octet, 8);
  }
}

bool BitBuffer::bit_at(std::size_t index) const {
  return (storage_[index / 8] & (0x80u >> (index % 8))) != 0;
}

void BitBuffer::require(std::size_t count) const {
  if (remaining() < count) {
    throw Error(Errc::truncated, "need " + std::to_string(count) + " bits, have " +
                                     std::to_string(remaining()));
  }
}

bool BitBuffer::read_bit() {
  require(1);
  return bit_at(cursor_++);
}

std::uint64_t BitBuffer::read_bits(std::size_t count) {
  require(count);
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    value = (value << 1) | (bit_at(cursor_ + i) ? 1u : 0u);
  }
  cursor_ += count;
  return value;
}

std::int64_t BitBuffer::read_constrained_int(std::int64_t lo, std::int64_t hi) {
  const std::size_t width = constrained_bit_width(lo, hi);
  const std::uint64_t offset = read_bits(width);
  const auto value = static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
  if (value < lo || value > hi) {
    throw Error(Errc::range_violation,
                "decoded value " + std::to_string(value) + " outside [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "]");
  }
  return value;
}

std::size_t BitBuffer::read_length_determinant() {
  if (!read_bit()) {
    return read_bits(7);
  }
  if (!read_bit()) {
    return read_bits(14);
  }
  throw Error(Errc::unsupported, "fragmented length determinant");
}

std::vector<std::uint8_t> BitBuffer::read_octets(std::size_t n) {
  require(n * 8);
  std::vector<std::uint8_t> octets(n);
  for (std::size_t i = 0; i < n; ++i) {
    octets[i] = static_cast<std::uint8_t>(read_bits(8));
  }
  return octets;
}

bool BitBuffer::remaining_is_zero() const {
  for (std::size_t i = cursor_; i < bit_size_; ++i) {
    if (bit_at(i)) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> BitBuffer::to_bytes() const {
  std::vector<std::uint8_t> bytes(storage_.begin(), storage_.begin() + (bit_size_ + 7) / 8);
  return bytes;
}

}  // namespace itskit::bits
