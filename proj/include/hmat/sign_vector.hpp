#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmat/errors.hpp"

namespace hmat {

// Fixed-length sequence of +1/-1 entries, stored one bit per entry
// (+1 maps to a set bit, entry i lives at bit i%64 of word i/64).
// Immutable after construction; bits above the length are always zero,
// so whole words can be compared, XORed and popcounted directly.
class SignVector {
 public:
  // All entries +1.
  static SignVector all_plus(std::size_t n);

  // Parse from a string of '+' and '-' characters.
  static SignVector from_string(std::string_view text);

  // Build from explicit +1/-1 values.
  static SignVector from_signs(std::span<const int> signs);

  // Build from a callable sign_at(i) -> +1/-1.
  template <typename F>
  static SignVector generate(std::size_t n, F&& sign_at) {
    SignVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      int s = sign_at(i);
      if (s == 1) {
        v.set_plus(i);
      } else if (s != -1) {
        throw DomainError("sign entries must be +1 or -1");
      }
    }
    return v;
  }

  // Build from packed words (low word first); bits above n are ignored.
  static SignVector from_words(std::size_t n, std::span<const std::uint64_t> words);

  std::size_t size() const { return size_; }
  bool is_plus(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  int sign(std::size_t i) const { return is_plus(i) ? 1 : -1; }

  std::size_t plus_count() const;

  // Entrywise negation (complement row).
  SignVector negated() const;

  // Negate exactly the entries with a set bit in `column_mask` (packed
  // like the vector itself). Used by normalization's column pass.
  SignVector negated_where(const SignVector& column_mask) const;

  std::string to_string() const;

  std::uint64_t word(std::size_t w) const { return words_[w]; }
  std::size_t word_count() const { return words_.size(); }

  bool operator==(const SignVector&) const = default;

  // Lexicographic order on entries with '+' sorting before '-'.
  bool operator<(const SignVector& other) const;

 private:
  explicit SignVector(std::size_t n);
  void set_plus(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace hmat
