#include "nlie/complex.hpp"

#include <string>

namespace nlie {

namespace {

class CochainReader {
 public:
  explicit CochainReader(const Cochain& c) : c_(c), words_(c.keys().blocks()) {}

  // alpha(blocks, tail) with blocks given as word ids
  const Vector* at(std::span<const std::size_t> ids, std::size_t tail) const {
    return c_.find(c_.keys().encode(ids, tail));
  }

  // out += coeff * alpha(ids with position pos replaced by the combination, tail)
  void add_with_block(Vector& out, const Scalar& coeff, std::vector<std::size_t> ids, std::size_t pos,
                      const WedgeCombination& combo, std::size_t tail) const {
    for (const auto& [w, a] : combo) {
      ids[pos] = words_.find(w.indices());
      if (const Vector* v = at(ids, tail)) add_scaled(out, coeff * a, *v);
    }
  }

  // out += coeff * alpha(ids, y) for a vector y in the tail slot
  void add_with_tail(Vector& out, const Scalar& coeff, std::span<const std::size_t> ids, const Vector& y) const {
    for (std::size_t t = 0; t < y.size(); ++t) {
      if (sgn(y[t]) == 0) continue;
      if (const Vector* v = at(ids, t)) add_scaled(out, coeff * y[t], *v);
    }
  }

 private:
  const Cochain& c_;
  const WordBasis& words_;
};

std::vector<std::size_t> drop(const std::vector<std::size_t>& ids, std::size_t pos) {
  std::vector<std::size_t> out;
  out.reserve(ids.size() - 1);
  for (std::size_t r = 0; r < ids.size(); ++r) {
    if (r != pos) out.push_back(ids[r]);
  }
  return out;
}

}  // namespace

Cochain delta_rho(const Representation& rep, const Cochain& alpha) {
  const NLieAlgebra& g = rep.algebra();
  const std::size_t n = g.arity();
  const std::size_t m = g.dim();
  if (alpha.space_dim() != m || alpha.value_dim() != rep.dim_v() || alpha.arity() != n) {
    throw InputError("delta_rho: cochain does not match the representation");
  }
  const std::size_t p = alpha.degree();
  Cochain out(m, rep.dim_v(), n, p + 1);
  if (out.keys().size() == 0) return out;
  const WordBasis& words = out.keys().blocks();
  const CochainReader a(alpha);

  // [chi_a, chi_b]_F and chi_a . z for all basis words, computed once
  const std::size_t nw = words.size();
  std::vector<WedgeCombination> fb(nw * nw);
  std::vector<Vector> ad(nw * m);
  for (std::size_t x = 0; x < nw; ++x) {
    const WedgeCombination wx{{words.word(x), Scalar(1)}};
    for (std::size_t y = 0; y < nw; ++y) {
      fb[x * nw + y] = fundamental_bracket(g, wx, WedgeCombination{{words.word(y), Scalar(1)}});
    }
    for (std::size_t t = 0; t < m; ++t) ad[x * m + t] = g.act(words.word(x).indices(), t);
  }

  std::vector<std::size_t> ids(p + 1);
  std::size_t z = 0;
  for (std::uint64_t key = 0; key < out.keys().size(); ++key) {
    out.keys().decode(key, ids, z);
    Vector value(rep.dim_v());

    // sum_{i<k} (-1)^i alpha(.., ^chi_i, .., [chi_i, chi_k]_F at k, .., z)
    for (std::size_t i = 0; i < p + 1; ++i) {
      for (std::size_t k = i + 1; k < p + 1; ++k) {
        const WedgeCombination& f = fb[ids[i] * nw + ids[k]];
        if (f.empty()) continue;
        a.add_with_block(value, parity_sign(i + 1), drop(ids, i), k - 1, f, z);
      }
    }
    for (std::size_t i = 0; i < p + 1; ++i) {
      const auto rest = drop(ids, i);
      // (-1)^i alpha(.., ^chi_i, .., [chi_i, z])
      a.add_with_tail(value, parity_sign(i + 1), rest, ad[ids[i] * m + z]);
      // (-1)^{i+1} rho(chi_i) alpha(.., ^chi_i, .., z)
      if (const Vector* v = a.at(rest, z)) {
        add_scaled(value, parity_sign(i + 2), rep.act(words.word(ids[i]).indices(), *v));
      }
    }
    // (-1)^{n+p-i} rho(x^1_{p+1}, .., ^x^i, .., z) alpha(chi_1, .., chi_p, x^i)
    const WedgeWord& last = words.word(ids[p]);
    const std::span<const std::size_t> head(ids.data(), p);
    for (std::size_t i = 0; i < n - 1; ++i) {
      const Vector* v = a.at(head, last[i]);
      if (!v) continue;
      SmallTuple args = last.indices().without(i);
      args.push_back(z);
      add_scaled(value, parity_sign(n + p - (i + 1)), rep.act(args, *v));
    }
    if (!is_zero(value)) out.set(key, std::move(value));
  }
  return out;
}

Cochain embed(const Cochain& alpha, const DirectSumSpace& space) {
  if (alpha.space_dim() != space.g_dim || alpha.value_dim() != space.v_dim) {
    throw InputError("embed: cochain is not a V-valued cochain on g");
  }
  const std::size_t p = alpha.degree();
  Cochain out(space.dim(), space.dim(), alpha.arity(), p);
  const WordBasis& src = alpha.keys().blocks();
  const WordBasis& dst = out.keys().blocks();
  std::vector<std::size_t> ids(p);
  std::size_t tail = 0;
  for (const auto& [key, value] : alpha.table()) {
    alpha.keys().decode(key, ids, tail);
    for (auto& b : ids) b = dst.find(src.word(b).indices());
    Vector v(space.dim());
    for (std::size_t j = 0; j < value.size(); ++j) v[space.from_v(j)] = value[j];
    out.set(out.keys().encode(ids, tail), std::move(v));
  }
  return out;
}

bool all_v_key(const KeySpace& keys, std::uint64_t key, const DirectSumSpace& space) {
  std::vector<std::size_t> ids(keys.degree());
  std::size_t tail = 0;
  keys.decode(key, ids, tail);
  if (space.in_g(tail)) return false;
  for (auto b : ids) {
    // words are increasing, so the first index decides
    if (space.in_g(keys.blocks().word(b)[0])) return false;
  }
  return true;
}

namespace {

bool pure_g_key(const KeySpace& keys, std::span<const std::size_t> ids, std::size_t tail, const DirectSumSpace& space) {
  if (!space.in_g(tail)) return false;
  for (auto b : ids) {
    const WedgeWord& w = keys.blocks().word(b);
    if (!space.in_g(w[w.size() - 1])) return false;
  }
  return true;
}

}  // namespace

Cochain restrict_to_g(const Cochain& alpha, const DirectSumSpace& space) {
  if (alpha.space_dim() != space.dim() || alpha.value_dim() != space.dim()) {
    throw InputError("restrict_to_g: cochain does not live on g (+) V");
  }
  const std::size_t p = alpha.degree();
  Cochain out(space.g_dim, space.v_dim, alpha.arity(), p);
  const WordBasis& src = alpha.keys().blocks();
  const WordBasis& dst = out.keys().blocks();
  std::vector<std::size_t> ids(p);
  std::size_t tail = 0;
  for (const auto& [key, value] : alpha.table()) {
    alpha.keys().decode(key, ids, tail);
    if (!pure_g_key(alpha.keys(), ids, tail, space)) continue;
    for (auto& b : ids) b = dst.find(src.word(b).indices());
    Vector v(space.v_dim);
    for (std::size_t j = 0; j < space.v_dim; ++j) v[j] = value[space.from_v(j)];
    out.set(out.keys().encode(ids, tail), std::move(v));
  }
  return out;
}

bool vanishes_on_all_v(const Cochain& alpha, const DirectSumSpace& space) {
  for (const auto& [key, value] : alpha.table()) {
    if (all_v_key(alpha.keys(), key, space)) return false;
  }
  return true;
}

bool is_v_valued(const Cochain& alpha, const DirectSumSpace& space) {
  for (const auto& [key, value] : alpha.table()) {
    for (std::size_t i = 0; i < space.g_dim; ++i) {
      if (sgn(value[i]) != 0) return false;
    }
  }
  return true;
}

bool is_restricted(const Cochain& alpha, const DirectSumSpace& space) {
  return alpha.space_dim() == space.dim() && alpha.value_dim() == space.dim() && is_v_valued(alpha, space) &&
         vanishes_on_all_v(alpha, space);
}

Cochain new_differential(const MuElement& mu, const Cochain& alpha) {
  if (alpha.arity() != mu.total.arity() || !is_restricted(alpha, mu.space)) {
    throw InputError("new_differential: input is not a restricted cochain on g (+) V");
  }
  Cochain out = graded_bracket(mu.total, alpha);
  if (!is_v_valued(out, mu.space)) {
    throw ConsistencyError("new_differential: output has a nonzero g component");
  }
  if (!vanishes_on_all_v(out, mu.space)) {
    throw ConsistencyError("new_differential: output is nonzero on an all-V key");
  }
  return out;
}

NewComplex::NewComplex(const GeneralizedRepresentation& rep) : mu_(build_mu(rep)) {
  const Cochain sq = graded_bracket(mu_.total, mu_.total);
  if (!sq.is_zero()) {
    throw InputError("not a generalized representation: [mu, mu] has " + std::to_string(sq.table().size()) +
                     " nonzero entries");
  }
}

Cochain NewComplex::zero(std::size_t degree) const {
  return Cochain(space().dim(), space().dim(), arity(), degree);
}

}  // namespace nlie
