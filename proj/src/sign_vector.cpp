#include "hmat/sign_vector.hpp"

#include <bit>

namespace hmat {

namespace {

std::uint64_t tail_mask(std::size_t n) {
  std::size_t rem = n & 63;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

SignVector::SignVector(std::size_t n)
    : size_(n), words_((n + 63) / 64, 0) {
  if (n == 0) throw DomainError("sign vector length must be positive");
}

SignVector SignVector::all_plus(std::size_t n) {
  SignVector v(n);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  v.words_.back() &= tail_mask(n);
  return v;
}

SignVector SignVector::from_string(std::string_view text) {
  SignVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      v.set_plus(i);
    } else if (text[i] != '-') {
      throw DomainError("sign vector text must contain only '+' and '-'");
    }
  }
  return v;
}

SignVector SignVector::from_signs(std::span<const int> signs) {
  return generate(signs.size(), [&](std::size_t i) { return signs[i]; });
}

SignVector SignVector::from_words(std::size_t n, std::span<const std::uint64_t> words) {
  SignVector v(n);
  if (words.size() < v.words_.size())
    throw DimensionError("not enough words for the requested length");
  for (std::size_t w = 0; w < v.words_.size(); ++w) v.words_[w] = words[w];
  v.words_.back() &= tail_mask(n);
  return v;
}

std::size_t SignVector::plus_count() const {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

SignVector SignVector::negated() const {
  SignVector v(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) v.words_[w] = ~words_[w];
  v.words_.back() &= tail_mask(size_);
  return v;
}

SignVector SignVector::negated_where(const SignVector& column_mask) const {
  if (column_mask.size_ != size_)
    throw DimensionError("column mask length does not match vector length");
  SignVector v(size_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    v.words_[w] = words_[w] ^ column_mask.words_[w];
  return v;
}

std::string SignVector::to_string() const {
  std::string s(size_, '-');
  for (std::size_t i = 0; i < size_; ++i)
    if (is_plus(i)) s[i] = '+';
  return s;
}

bool SignVector::operator<(const SignVector& other) const {
  if (size_ != other.size_)
    throw DimensionError("cannot order sign vectors of different lengths");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      // The lowest differing bit is the earliest differing entry;
      // '+' (set bit) sorts first.
      int b = std::countr_zero(diff);
      return (words_[w] >> b) & 1u;
    }
  }
  return false;
}

}  // namespace hmat
