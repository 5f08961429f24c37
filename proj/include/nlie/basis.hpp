#pragma once

// Wedge-word bases, shuffle signs and cochain-key enumeration.
//
// Every index set in this library is a strictly increasing tuple of basis
// indices; skew-symmetry is realized by sorting with a permutation sign.
// Ordering is lexicographic everywhere so that matrices and reports come out
// in a reproducible order.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nlie/scalar.hpp"

namespace nlie {

/// Longest wedge word supported (arity n <= kMaxWordLength + 1).
inline constexpr std::size_t kMaxWordLength = 8;

/// Fixed-capacity tuple of small indices, no ordering invariant.
class SmallTuple {
 public:
  SmallTuple() = default;
  SmallTuple(std::initializer_list<std::size_t> xs);
  explicit SmallTuple(std::span<const std::size_t> xs);

  void push_back(std::size_t x);
  void set(std::size_t pos, std::size_t x) { data_[pos] = static_cast<std::uint16_t>(x); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t operator[](std::size_t i) const { return data_[i]; }
  const std::uint16_t* begin() const { return data_.data(); }
  const std::uint16_t* end() const { return data_.data() + size_; }
  std::uint16_t* begin() { return data_.data(); }
  std::uint16_t* end() { return data_.data() + size_; }

  /// Copy with position `pos` removed.
  SmallTuple without(std::size_t pos) const;
  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  friend auto operator<=>(const SmallTuple&, const SmallTuple&) = default;

 private:
  std::array<std::uint16_t, kMaxWordLength + 1> data_{};
  std::uint8_t size_ = 0;
};

/// Strictly increasing tuple of basis indices: a basis element of a wedge power.
class WedgeWord {
 public:
  WedgeWord() = default;
  /// Throws InputError unless `indices` is strictly increasing.
  static WedgeWord from_increasing(std::span<const std::size_t> indices);
  static WedgeWord from_increasing(std::initializer_list<std::size_t> indices);
  /// No validation; caller guarantees the invariant.
  static WedgeWord trusted(const SmallTuple& sorted) {
    WedgeWord w;
    w.idx_ = sorted;
    return w;
  }

  std::size_t size() const { return idx_.size(); }
  std::size_t operator[](std::size_t i) const { return idx_[i]; }
  const std::uint16_t* begin() const { return idx_.begin(); }
  const std::uint16_t* end() const { return idx_.end(); }
  const SmallTuple& indices() const { return idx_; }
  std::vector<std::size_t> to_vector() const { return idx_.to_vector(); }
  bool contains(std::size_t x) const;

  friend auto operator<=>(const WedgeWord&, const WedgeWord&) = default;

 private:
  SmallTuple idx_;
};

struct SignedWedge {
  WedgeWord word;
  int sign = 0;  // 0 iff the source tuple repeated an index
};

/// Sorts `indices` and returns the sort permutation's parity (0 on repeats).
/// Throws InputError if an index is >= dim.
SignedWedge normalize_wedge(std::span<const std::size_t> indices, std::size_t dim);
/// Unchecked fast path used in the inner loops.
SignedWedge normalize_tuple(SmallTuple t);

/// +1/-1 parity of the ordering of distinct values (inversion count).
int permutation_parity(std::span<const std::size_t> values);

/// Split of N = {1..N} into J (size q+1) and its complement I (size p).
struct ShuffleSplit {
  std::vector<std::size_t> j;  // increasing, 1-based
  std::vector<std::size_t> i;  // increasing, 1-based
  /// #{ i in I : i < j.back() }; equals p when j.back() == N.
  std::size_t k = 0;
  /// Parity of the permutation (j_1..j_{q+1}, i_1..i_p) of N.
  int sign = 1;
};

ShuffleSplit shuffle_sign(std::span<const std::size_t> j, std::size_t n_size);
/// All splits with |J| = j_size, J in lexicographic order.
std::vector<ShuffleSplit> all_shuffle_splits(std::size_t n_size, std::size_t j_size);

/// Lexicographically ordered basis of increasing `length`-words over [0, dim).
class WordBasis {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  WordBasis(std::size_t dim, std::size_t length);

  std::size_t dim() const { return dim_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const WedgeWord& word(std::size_t i) const { return words_[i]; }
  const std::vector<WedgeWord>& words() const { return words_; }

  std::optional<std::size_t> index_of(const WedgeWord& w) const;
  /// npos if `sorted` is not a word of this basis.
  std::size_t find(const SmallTuple& sorted) const;

 private:
  std::size_t dim_;
  std::size_t length_;
  std::vector<WedgeWord> words_;
  std::vector<std::uint32_t> code_to_index_;  // dense table over dim^length codes
  std::map<WedgeWord, std::size_t> fallback_;
};

/// Process-wide cache; bases are immutable once built.
std::shared_ptr<const WordBasis> shared_word_basis(std::size_t dim, std::size_t length);

/// Argument tuple (block_1, ..., block_p, tail) of a degree-p cochain.
struct CochainKey {
  std::vector<WedgeWord> blocks;
  std::size_t tail = 0;

  friend auto operator<=>(const CochainKey&, const CochainKey&) = default;
};

/// Bijection between cochain keys and [0, size()), lexicographic in
/// (block_1, ..., block_p, tail).
class KeySpace {
 public:
  KeySpace(std::size_t space_dim, std::size_t arity, std::size_t degree);

  std::size_t space_dim() const { return space_dim_; }
  std::size_t arity() const { return arity_; }
  std::size_t degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  const WordBasis& blocks() const { return *blocks_; }

  std::uint64_t encode(std::span<const std::size_t> block_ids, std::size_t tail) const {
    std::uint64_t code = 0;
    for (auto b : block_ids) code = code * blocks_->size() + b;
    return code * space_dim_ + tail;
  }
  void decode(std::uint64_t code, std::span<std::size_t> block_ids, std::size_t& tail) const {
    tail = static_cast<std::size_t>(code % space_dim_);
    code /= space_dim_;
    for (std::size_t r = degree_; r-- > 0;) {
      block_ids[r] = static_cast<std::size_t>(code % blocks_->size());
      code /= blocks_->size();
    }
  }

  CochainKey key(std::uint64_t code) const;
  /// Throws InputError on a malformed key.
  std::uint64_t index(const CochainKey& key) const;

 private:
  std::size_t space_dim_;
  std::size_t arity_;
  std::size_t degree_;
  std::shared_ptr<const WordBasis> blocks_;
  std::uint64_t size_ = 0;
};

/// All keys of degree p over a space of dimension w_dim, block size n-1.
std::vector<CochainKey> enumerate_cochain_keys(std::size_t w_dim, std::size_t arity, std::size_t degree);

/// Linear combination of wedge words.
using WedgeCombination = std::map<WedgeWord, Scalar>;

void add_term(WedgeCombination& combo, const WedgeWord& w, const Scalar& c);

/// Substitutes `v` into slot `slot` (1-based) of `word` and renormalizes.
WedgeCombination replace_slot(const WedgeWord& word, std::size_t slot, const Vector& v);

}  // namespace nlie
