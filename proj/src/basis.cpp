#include "nlie/basis.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>

namespace nlie {

SmallTuple::SmallTuple(std::initializer_list<std::size_t> xs) {
  for (auto x : xs) push_back(x);
}

SmallTuple::SmallTuple(std::span<const std::size_t> xs) {
  for (auto x : xs) push_back(x);
}

void SmallTuple::push_back(std::size_t x) {
  if (size_ == data_.size()) throw InputError("tuple longer than supported maximum");
  if (x > std::numeric_limits<std::uint16_t>::max()) throw InputError("basis index too large");
  data_[size_++] = static_cast<std::uint16_t>(x);
}

SmallTuple SmallTuple::without(std::size_t pos) const {
  SmallTuple out;
  for (std::size_t r = 0; r < size_; ++r) {
    if (r != pos) out.data_[out.size_++] = data_[r];
  }
  return out;
}

WedgeWord WedgeWord::from_increasing(std::span<const std::size_t> indices) {
  for (std::size_t r = 1; r < indices.size(); ++r) {
    if (indices[r - 1] >= indices[r]) throw InputError("wedge word indices must be strictly increasing");
  }
  WedgeWord w;
  w.idx_ = SmallTuple(indices);
  return w;
}

WedgeWord WedgeWord::from_increasing(std::initializer_list<std::size_t> indices) {
  return from_increasing(std::span<const std::size_t>(indices.begin(), indices.size()));
}

bool WedgeWord::contains(std::size_t x) const { return std::binary_search(begin(), end(), x); }

SignedWedge normalize_tuple(SmallTuple t) {
  // insertion sort; n is tiny
  int sign = 1;
  auto* d = t.begin();
  const std::size_t n = t.size();
  for (std::size_t a = 1; a < n; ++a) {
    const auto key = d[a];
    std::size_t b = a;
    while (b > 0 && d[b - 1] > key) {
      d[b] = d[b - 1];
      --b;
      sign = -sign;
    }
    if (b > 0 && d[b - 1] == key) return {};
    d[b] = key;
  }
  return {WedgeWord::trusted(t), sign};
}

SignedWedge normalize_wedge(std::span<const std::size_t> indices, std::size_t dim) {
  for (auto x : indices) {
    if (x >= dim) {
      throw InputError("index " + std::to_string(x) + " out of range for dimension " + std::to_string(dim));
    }
  }
  return normalize_tuple(SmallTuple(indices));
}

int permutation_parity(std::span<const std::size_t> values) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (values[a] > values[b]) ++inversions;
    }
  }
  return parity_sign(inversions);
}

ShuffleSplit shuffle_sign(std::span<const std::size_t> j, std::size_t n_size) {
  if (j.empty()) throw InputError("shuffle split needs a nonempty J");
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r] < 1 || j[r] > n_size) throw InputError("J element out of range");
    if (r > 0 && j[r - 1] >= j[r]) throw InputError("J must be strictly increasing");
  }
  ShuffleSplit s;
  s.j.assign(j.begin(), j.end());
  for (std::size_t x = 1; x <= n_size; ++x) {
    if (!std::binary_search(j.begin(), j.end(), x)) s.i.push_back(x);
  }
  const std::size_t last = j.back();
  s.k = static_cast<std::size_t>(std::count_if(s.i.begin(), s.i.end(), [&](std::size_t x) { return x < last; }));
  std::vector<std::size_t> perm = s.j;
  perm.insert(perm.end(), s.i.begin(), s.i.end());
  s.sign = permutation_parity(perm);
  return s;
}

std::vector<ShuffleSplit> all_shuffle_splits(std::size_t n_size, std::size_t j_size) {
  std::vector<ShuffleSplit> out;
  if (j_size == 0 || j_size > n_size) return out;
  std::vector<std::size_t> j(j_size);
  for (std::size_t r = 0; r < j_size; ++r) j[r] = r + 1;
  while (true) {
    out.push_back(shuffle_sign(j, n_size));
    std::size_t r = j_size;
    while (r > 0 && j[r - 1] == n_size - j_size + r) --r;
    if (r == 0) break;
    ++j[r - 1];
    for (std::size_t t = r; t < j_size; ++t) j[t] = j[t - 1] + 1;
  }
  return out;
}

namespace {

constexpr std::size_t kDenseCodeLimit = std::size_t{1} << 22;

std::size_t word_code(const SmallTuple& t, std::size_t dim) {
  std::size_t code = 0;
  for (auto x : t) code = code * dim + x;
  return code;
}

}  // namespace

WordBasis::WordBasis(std::size_t dim, std::size_t length) : dim_(dim), length_(length) {
  if (length > kMaxWordLength + 1) throw InputError("wedge length exceeds supported maximum");
  if (length <= dim) {
    std::vector<std::size_t> w(length);
    for (std::size_t r = 0; r < length; ++r) w[r] = r;
    while (true) {
      words_.push_back(WedgeWord::trusted(SmallTuple(std::span<const std::size_t>(w))));
      std::size_t r = length;
      while (r > 0 && w[r - 1] == dim - length + r - 1) --r;
      if (r == 0) break;
      ++w[r - 1];
      for (std::size_t t = r; t < length; ++t) w[t] = w[t - 1] + 1;
    }
  }
  double codes = 1;
  for (std::size_t r = 0; r < length; ++r) codes *= static_cast<double>(dim);
  if (codes <= static_cast<double>(kDenseCodeLimit)) {
    code_to_index_.assign(static_cast<std::size_t>(codes), std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      code_to_index_[word_code(words_[i].indices(), dim_)] = static_cast<std::uint32_t>(i);
    }
  } else {
    for (std::size_t i = 0; i < words_.size(); ++i) fallback_.emplace(words_[i], i);
  }
}

std::size_t WordBasis::find(const SmallTuple& sorted) const {
  if (sorted.size() != length_) return npos;
  for (auto x : sorted) {
    if (x >= dim_) return npos;
  }
  if (!code_to_index_.empty() || fallback_.empty()) {
    if (code_to_index_.empty()) return words_.empty() ? npos : 0;
    const auto v = code_to_index_[word_code(sorted, dim_)];
    return v == std::numeric_limits<std::uint32_t>::max() ? npos : v;
  }
  auto it = fallback_.find(WedgeWord::trusted(sorted));
  return it == fallback_.end() ? npos : it->second;
}

std::optional<std::size_t> WordBasis::index_of(const WedgeWord& w) const {
  const auto i = find(w.indices());
  if (i == npos) return std::nullopt;
  return i;
}

std::shared_ptr<const WordBasis> shared_word_basis(std::size_t dim, std::size_t length) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const WordBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{dim, length}];
  if (!slot) slot = std::make_shared<const WordBasis>(dim, length);
  return slot;
}

KeySpace::KeySpace(std::size_t space_dim, std::size_t arity, std::size_t degree)
    : space_dim_(space_dim), arity_(arity), degree_(degree) {
  if (space_dim == 0) throw InputError("cochain space must have positive dimension");
  if (arity < 2) throw InputError("arity must be at least 2");
  blocks_ = shared_word_basis(space_dim, arity - 1);
  // size = |blocks|^degree * space_dim, with overflow detection
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = space_dim;
  for (std::size_t r = 0; r < degree; ++r) {
    const std::uint64_t b = blocks_->size();
    if (b != 0 && size > limit / b) throw InputError("cochain key space too large");
    size *= b;
  }
  size_ = size;
}

CochainKey KeySpace::key(std::uint64_t code) const {
  std::vector<std::size_t> ids(degree_);
  CochainKey k;
  decode(code, ids, k.tail);
  k.blocks.reserve(degree_);
  for (auto id : ids) k.blocks.push_back(blocks_->word(id));
  return k;
}

std::uint64_t KeySpace::index(const CochainKey& key) const {
  if (key.blocks.size() != degree_) throw InputError("cochain key has wrong number of blocks");
  if (key.tail >= space_dim_) throw InputError("cochain key tail out of range");
  std::vector<std::size_t> ids;
  ids.reserve(degree_);
  for (const auto& b : key.blocks) {
    auto id = blocks_->index_of(b);
    if (!id) throw InputError("cochain key block is not a basis word");
    ids.push_back(*id);
  }
  return encode(ids, key.tail);
}

std::vector<CochainKey> enumerate_cochain_keys(std::size_t w_dim, std::size_t arity, std::size_t degree) {
  if (w_dim < 1) throw InputError("space dimension must be positive");
  if (arity < 2) throw InputError("arity must be at least 2");
  KeySpace space(w_dim, arity, degree);
  std::vector<CochainKey> out;
  out.reserve(space.size());
  for (std::uint64_t c = 0; c < space.size(); ++c) out.push_back(space.key(c));
  return out;
}

void add_term(WedgeCombination& combo, const WedgeWord& w, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = combo.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) combo.erase(it);
  }
}

WedgeCombination replace_slot(const WedgeWord& word, std::size_t slot, const Vector& v) {
  if (slot < 1 || slot > word.size()) throw InputError("slot out of range");
  WedgeCombination out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (sgn(v[t]) == 0) continue;
    SmallTuple tuple = word.indices();
    tuple.set(slot - 1, t);
    auto sw = normalize_tuple(tuple);
    if (sw.sign == 0) continue;
    add_term(out, sw.word, sw.sign * v[t]);
  }
  return out;
}

}  // namespace nlie
