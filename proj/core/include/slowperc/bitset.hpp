#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace slowperc {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

namespace bits {

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t popcount(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline bool any(std::span<const Word> w) {
  for (Word x : w)
    if (x) return true;
  return false;
}

// out = a & b; returns popcount of the result.
inline std::size_t and_into(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a[i] & b[i];
    c += static_cast<std::size_t>(std::popcount(out[i]));
  }
  return c;
}

// Clears bits 0..i inclusive.
inline void clear_through(std::span<Word> w, std::size_t i) {
  const std::size_t wi = i / kWordBits;
  for (std::size_t k = 0; k < wi; ++k) w[k] = 0;
  const std::size_t b = i % kWordBits;
  w[wi] &= (b == kWordBits - 1) ? Word{0} : ~((Word{2} << b) - 1);
}

// Calls f(index) for every set bit, ascending. Stops early when f returns false
// (if f returns bool).
template <typename F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word x = w[k];
    while (x) {
      const auto i = static_cast<Vertex>(k * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
      if constexpr (std::is_same_v<decltype(f(i)), bool>) {
        if (!f(i)) return;
      } else {
        f(i);
      }
    }
  }
}

}  // namespace bits

// Fixed-universe set of vertex ids backed by a bit-vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(bits::words_for(universe), 0) {}

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const { return v < universe_ && bits::test(words_, v); }
  void insert(Vertex v) { bits::set(words_, v); }
  void erase(Vertex v) { bits::reset(words_, v); }
  std::size_t size() const { return bits::popcount(words_); }
  bool empty() const { return !bits::any(words_); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    bits::for_each(words_, [&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace slowperc
