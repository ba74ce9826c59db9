#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace netsac {

/// Flat indexing of a mixed-radix product space, least-significant-first:
///   index = sum_k values[k] * prod_{j<k} radices[j].
/// Index 0 is the all-zeros configuration.
class MixedRadixCodec {
 public:
  MixedRadixCodec() = default;

  explicit MixedRadixCodec(std::vector<int> radices) : radices_(std::move(radices)) {
    strides_.reserve(radices_.size());
    std::uint64_t stride = 1;
    for (int r : radices_) {
      if (r <= 0) throw std::invalid_argument("MixedRadixCodec: radices must be positive");
      strides_.push_back(stride);
      std::uint64_t next = stride * static_cast<std::uint64_t>(r);
      if (stride != 0 && next / stride != static_cast<std::uint64_t>(r))
        throw std::overflow_error("MixedRadixCodec: index space exceeds 64 bits");
      stride = next;
    }
    span_ = stride;
  }

  std::size_t digits() const { return radices_.size(); }
  const std::vector<int>& radices() const { return radices_; }

  /// Total number of configurations (product of radices); 1 for empty radices.
  std::uint64_t span() const { return span_; }

  std::uint64_t encode(std::span<const int> values) const {
    if (values.size() != radices_.size())
      throw std::invalid_argument("MixedRadixCodec::encode: wrong number of values");
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] < 0 || values[k] >= radices_[k])
        throw std::out_of_range("MixedRadixCodec::encode: value out of range");
      index += static_cast<std::uint64_t>(values[k]) * strides_[k];
    }
    return index;
  }

  /// Unchecked encode for hot loops; caller guarantees values are in range.
  std::uint64_t encode_unchecked(std::span<const int> values) const {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < values.size(); ++k)
      index += static_cast<std::uint64_t>(values[k]) * strides_[k];
    return index;
  }

  void decode(std::uint64_t index, std::span<int> out) const {
    if (index >= span_) throw std::out_of_range("MixedRadixCodec::decode: index out of range");
    if (out.size() != radices_.size())
      throw std::invalid_argument("MixedRadixCodec::decode: wrong output size");
    for (std::size_t k = 0; k < radices_.size(); ++k) {
      out[k] = static_cast<int>(index % static_cast<std::uint64_t>(radices_[k]));
      index /= static_cast<std::uint64_t>(radices_[k]);
    }
  }

  std::vector<int> decode(std::uint64_t index) const {
    std::vector<int> out(radices_.size());
    decode(index, std::span<int>(out));
    return out;
  }

 private:
  std::vector<int> radices_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t span_ = 1;
};

}  // namespace netsac
