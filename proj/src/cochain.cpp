#include "nlie/cochain.hpp"

#include <unordered_map>

namespace nlie {

Cochain::Cochain(std::size_t space_dim, std::size_t value_dim, std::size_t arity, std::size_t degree)
    : keys_(space_dim, arity, degree), value_dim_(value_dim) {
  if (value_dim == 0) throw InputError("cochain value space must have positive dimension");
}

const Vector* Cochain::find(std::uint64_t key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

Vector Cochain::value(const CochainKey& key) const {
  const Vector* v = find(keys_.index(key));
  return v ? *v : Vector(value_dim_);
}

Vector Cochain::value_on(std::span<const SmallTuple> blocks, std::size_t tail) const {
  if (blocks.size() != degree()) throw InputError("wrong number of blocks");
  int sign = 1;
  std::vector<std::size_t> ids(blocks.size());
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    auto sw = normalize_tuple(blocks[r]);
    if (sw.sign == 0) return Vector(value_dim_);
    sign *= sw.sign;
    ids[r] = keys_.blocks().find(sw.word.indices());
    if (ids[r] == WordBasis::npos) throw InputError("block is not a word of the cochain space");
  }
  const Vector* v = find(keys_.encode(ids, tail));
  if (!v) return Vector(value_dim_);
  return sign > 0 ? *v : -*v;
}

void Cochain::set(std::uint64_t key, Vector value) {
  if (value.size() != value_dim_) throw InputError("cochain value has wrong dimension");
  if (key >= keys_.size()) throw InputError("cochain key out of range");
  if (nlie::is_zero(value)) {
    table_.erase(key);
  } else {
    table_[key] = std::move(value);
  }
}

void Cochain::add(std::uint64_t key, const Scalar& coeff, const Vector& value) {
  if (sgn(coeff) == 0 || nlie::is_zero(value)) return;
  auto [it, inserted] = table_.try_emplace(key, Vector(value_dim_));
  add_scaled(it->second, coeff, value);
  if (nlie::is_zero(it->second)) table_.erase(it);
}

bool Cochain::same_shape(const Cochain& other) const {
  return space_dim() == other.space_dim() && value_dim() == other.value_dim() && arity() == other.arity() &&
         degree() == other.degree();
}

bool operator==(const Cochain& a, const Cochain& b) { return a.same_shape(b) && a.table_ == b.table_; }

Cochain operator+(Cochain a, const Cochain& b) {
  if (!a.same_shape(b)) throw InputError("cochain shapes differ");
  for (const auto& [k, v] : b.table_) a.add(k, 1, v);
  return a;
}

Cochain operator-(Cochain a, const Cochain& b) {
  if (!a.same_shape(b)) throw InputError("cochain shapes differ");
  for (const auto& [k, v] : b.table_) a.add(k, -1, v);
  return a;
}

Cochain operator*(const Scalar& s, Cochain a) {
  if (sgn(s) == 0) {
    a.table_.clear();
    return a;
  }
  for (auto& [k, v] : a.table_) {
    for (auto& x : v) x *= s;
  }
  return a;
}

namespace {

struct DecodedEntry {
  std::vector<std::size_t> blocks;
  std::size_t tail = 0;
  // sparse copy of the value
  std::vector<std::pair<std::size_t, Scalar>> nonzero;
  const Vector* dense = nullptr;
};

std::vector<DecodedEntry> decode_all(const Cochain& c) {
  std::vector<DecodedEntry> out;
  out.reserve(c.table().size());
  for (const auto& [key, value] : c.table()) {
    DecodedEntry e;
    e.blocks.resize(c.degree());
    c.keys().decode(key, e.blocks, e.tail);
    for (std::size_t t = 0; t < value.size(); ++t) {
      if (sgn(value[t]) != 0) e.nonzero.emplace_back(t, value[t]);
    }
    e.dense = &value;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Cochain compose(const Cochain& alpha, const Cochain& beta) {
  if (alpha.space_dim() != beta.space_dim() || alpha.arity() != beta.arity()) {
    throw InputError("compose: cochains live on different spaces");
  }
  if (beta.value_dim() != alpha.space_dim()) {
    throw InputError("compose: inner cochain values do not lie in the argument space");
  }
  const std::size_t p = alpha.degree();
  const std::size_t q = beta.degree();
  const std::size_t total = p + q;
  Cochain out(alpha.space_dim(), alpha.value_dim(), alpha.arity(), total);
  if (alpha.is_zero() || beta.is_zero()) return out;

  const auto splits = all_shuffle_splits(total + 1, q + 1);
  const WordBasis& words = alpha.keys().blocks();
  const KeySpace& out_keys = out.keys();
  const auto alpha_entries = decode_all(alpha);
  const auto beta_entries = decode_all(beta);

  std::unordered_map<std::uint64_t, Vector> acc;
  acc.reserve(alpha_entries.size() * beta_entries.size());
  Scalar product;
  auto accumulate = [&](std::uint64_t key, const Scalar& coeff, const DecodedEntry& a) {
    auto [it, inserted] = acc.try_emplace(key);
    if (inserted) it->second.resize(alpha.value_dim());
    for (const auto& [t, x] : a.nonzero) {
      mpq_mul(product.get_mpq_t(), coeff.get_mpq_t(), x.get_mpq_t());
      mpq_add(it->second[t].get_mpq_t(), it->second[t].get_mpq_t(), product.get_mpq_t());
    }
  };

  std::vector<std::size_t> out_blocks(total);
  Scalar coeff;
  for (const auto& a : alpha_entries) {
    for (const auto& b : beta_entries) {
      const Vector& w = *b.dense;
      for (const auto& split : splits) {
        const std::size_t last = split.j.back();
        if (last == total + 1) {
          // alpha(X_I, beta(X_J', z))
          const Scalar& c = w[a.tail];
          if (sgn(c) == 0) continue;
          for (std::size_t r = 0; r < q; ++r) out_blocks[split.j[r] - 1] = b.blocks[r];
          for (std::size_t r = 0; r < p; ++r) out_blocks[split.i[r] - 1] = a.blocks[r];
          coeff = c;
          if (split.sign * parity_sign(p) < 0) coeff = -coeff;
          accumulate(out_keys.encode(out_blocks, b.tail), coeff, a);
        } else {
          // beta substituted into one slot of block X_{j_{q+1}}, which lands
          // in alpha's (k+1)-th block position.
          const std::size_t k = split.k;
          const WedgeWord& aw = words.word(a.blocks[k]);
          for (std::size_t r = 0; r < aw.size(); ++r) {
            const Scalar& c = w[aw[r]];
            if (sgn(c) == 0) continue;
            SmallTuple y = aw.indices();
            y.set(r, b.tail);
            auto sw = normalize_tuple(y);
            if (sw.sign == 0) continue;
            for (std::size_t t = 0; t < q; ++t) out_blocks[split.j[t] - 1] = b.blocks[t];
            out_blocks[last - 1] = words.find(sw.word.indices());
            for (std::size_t t = 0; t + 1 < p; ++t) out_blocks[split.i[t] - 1] = a.blocks[t < k ? t : t + 1];
            coeff = c;
            if (split.sign * parity_sign(k) * sw.sign < 0) coeff = -coeff;
            accumulate(out_keys.encode(out_blocks, a.tail), coeff, a);
          }
        }
      }
    }
  }
  for (auto& [key, value] : acc) {
    if (!is_zero(value)) out.set(key, std::move(value));
  }
  return out;
}

Cochain graded_bracket(const Cochain& alpha, const Cochain& beta) {
  const bool odd = (alpha.degree() * beta.degree()) % 2 == 1;
  Cochain ab = compose(alpha, beta);
  const Cochain ba = compose(beta, alpha);
  if (odd) return Scalar(-1) * std::move(ab) - ba;
  return std::move(ab) - ba;
}

Cochain structure_cochain(const NLieAlgebra& algebra) {
  const std::size_t m = algebra.dim();
  Cochain pi(m, m, algebra.arity(), 1);
  const auto& words = pi.keys().blocks();
  for (std::size_t b = 0; b < words.size(); ++b) {
    for (std::size_t z = 0; z < m; ++z) {
      SmallTuple args = words.word(b).indices();
      args.push_back(z);
      Vector v = algebra.bracket_basis(args);
      if (!is_zero(v)) pi.set(pi.keys().encode(std::span<const std::size_t>(&b, 1), z), std::move(v));
    }
  }
  return pi;
}

}  // namespace nlie
