#include "nlie/cocycle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace nlie {

TwoCochainTriple::TwoCochainTriple(const DirectSumSpace& space, std::size_t arity) : space_(space), arity_(arity) {
  if (arity < 3) throw InputError("the 2-cocycle battery needs arity n >= 3");
}

void TwoCochainTriple::set_beta1(const WedgeWord& u, std::size_t x, Vector value) {
  if (u.size() + 1 != arity_ || x >= space_.g_dim || value.size() != space_.v_dim) throw InputError("bad beta1 entry");
  for (auto i : u) {
    if (i >= space_.v_dim) throw InputError("beta1 V index out of range");
  }
  if (is_zero(value)) {
    beta1_.erase({u, x});
  } else {
    beta1_[{u, x}] = std::move(value);
  }
}

void TwoCochainTriple::set_beta2(const WedgeWord& x, std::size_t v, Vector value) {
  if (x.size() + 1 != arity_ || v >= space_.v_dim || value.size() != space_.v_dim) throw InputError("bad beta2 entry");
  for (auto i : x) {
    if (i >= space_.g_dim) throw InputError("beta2 g index out of range");
  }
  if (is_zero(value)) {
    beta2_.erase({x, v});
  } else {
    beta2_[{x, v}] = std::move(value);
  }
}

void TwoCochainTriple::set_beta3(const WedgeWord& x, Vector value) {
  if (x.size() != arity_ || value.size() != space_.v_dim) throw InputError("bad beta3 entry");
  for (auto i : x) {
    if (i >= space_.g_dim) throw InputError("beta3 g index out of range");
  }
  if (is_zero(value)) {
    beta3_.erase(x);
  } else {
    beta3_[x] = std::move(value);
  }
}

Vector TwoCochainTriple::component_on_sorted(int c, const WedgeWord& sorted) const {
  const std::size_t n = arity_;
  std::size_t g_count = 0;
  for (auto i : sorted) g_count += space_.in_g(i) ? 1 : 0;
  if (c == 3 && g_count == n) {
    auto it = beta3_.find(sorted);
    if (it != beta3_.end()) return it->second;
  } else if (c == 2 && g_count == n - 1) {
    SmallTuple x = sorted.indices().without(n - 1);
    auto it = beta2_.find({WedgeWord::trusted(x), sorted[n - 1] - space_.g_dim});
    if (it != beta2_.end()) return it->second;
  } else if (c == 1 && g_count == 1) {
    SmallTuple u;
    for (std::size_t r = 1; r < n; ++r) u.push_back(sorted[r] - space_.g_dim);
    auto it = beta1_.find({WedgeWord::trusted(u), sorted[0]});
    // beta(x, u_1, .., u_{n-1}) = (-1)^{n-1} beta1(u_1, .., u_{n-1}, x)
    if (it != beta1_.end()) return parity_sign(n - 1) > 0 ? it->second : -it->second;
  }
  return Vector(space_.v_dim);
}

namespace {

template <class Map>
void merge_into(Map& dst, const Map& src, const Scalar& s) {
  for (const auto& [k, v] : src) {
    auto it = dst.try_emplace(k, Vector(v.size())).first;
    add_scaled(it->second, s, v);
    if (is_zero(it->second)) dst.erase(it);
  }
}

Vector embed_v(const DirectSumSpace& space, const Vector& v) {
  Vector out(space.dim());
  for (std::size_t j = 0; j < v.size(); ++j) out[space.from_v(j)] = v[j];
  return out;
}

Vector v_part(const DirectSumSpace& space, const Vector& w) {
  return Vector(w.begin() + static_cast<std::ptrdiff_t>(space.g_dim), w.end());
}

}  // namespace

TwoCochainTriple operator+(TwoCochainTriple a, const TwoCochainTriple& b) {
  if (!(a.space_ == b.space_) || a.arity_ != b.arity_) throw InputError("triples live on different spaces");
  merge_into(a.beta1_, b.beta1_, 1);
  merge_into(a.beta2_, b.beta2_, 1);
  merge_into(a.beta3_, b.beta3_, 1);
  return a;
}

TwoCochainTriple operator*(const Scalar& s, TwoCochainTriple a) {
  TwoCochainTriple out(a.space_, a.arity_);
  merge_into(out.beta1_, a.beta1_, s);
  merge_into(out.beta2_, a.beta2_, s);
  merge_into(out.beta3_, a.beta3_, s);
  return out;
}

Cochain to_cochain(const TwoCochainTriple& beta, int component) {
  const DirectSumSpace& space = beta.space();
  const std::size_t n = beta.arity();
  Cochain out(space.dim(), space.dim(), n, 1);
  const WordBasis& words = out.keys().blocks();
  for (std::size_t b = 0; b < words.size(); ++b) {
    for (std::size_t t = 0; t < space.dim(); ++t) {
      SmallTuple args = words.word(b).indices();
      args.push_back(t);
      const SignedWedge sw = normalize_tuple(args);
      if (sw.sign == 0) continue;
      Vector v(space.v_dim);
      for (int c = 1; c <= 3; ++c) {
        if (component == 0 || component == c) v = v + beta.component_on_sorted(c, sw.word);
      }
      if (is_zero(v)) continue;
      out.set(out.keys().encode(std::span<const std::size_t>(&b, 1), t), sw.sign * embed_v(space, v));
    }
  }
  return out;
}

TwoCochainTriple triple_from_cochain(const Cochain& c, const DirectSumSpace& space) {
  if (c.degree() != 1 || c.space_dim() != space.dim() || c.value_dim() != space.dim()) {
    throw InputError("triple_from_cochain needs a degree-1 cochain on g (+) V");
  }
  const std::size_t n = c.arity();
  TwoCochainTriple out(space, n);
  const WordBasis& blocks = c.keys().blocks();
  for (const auto& w : shared_word_basis(space.dim(), n)->words()) {
    const std::size_t b = blocks.find(w.indices().without(n - 1));
    const Vector* value = c.find(c.keys().encode(std::span<const std::size_t>(&b, 1), w[n - 1]));
    if (!value) continue;
    const Vector v = v_part(space, *value);
    std::size_t g_count = 0;
    for (auto i : w) g_count += space.in_g(i) ? 1 : 0;
    if (g_count == n) {
      out.set_beta3(w, v);
    } else if (g_count == n - 1) {
      out.set_beta2(WedgeWord::trusted(w.indices().without(n - 1)), w[n - 1] - space.g_dim, v);
    } else if (g_count == 1) {
      SmallTuple u;
      for (std::size_t r = 1; r < n; ++r) u.push_back(w[r] - space.g_dim);
      out.set_beta1(WedgeWord::trusted(u), w[0], parity_sign(n - 1) * v);
    }
  }
  return out;
}

bool is_totally_skew(const Cochain& c) {
  if (c.degree() != 1) return false;
  const WordBasis& blocks = c.keys().blocks();
  const std::size_t n = c.arity();
  std::size_t b = 0;
  std::size_t t = 0;
  for (std::uint64_t key = 0; key < c.keys().size(); ++key) {
    c.keys().decode(key, std::span<std::size_t>(&b, 1), t);
    SmallTuple args = blocks.word(b).indices();
    args.push_back(t);
    const SignedWedge sw = normalize_tuple(args);
    const Vector* v = c.find(key);
    if (sw.sign == 0) {
      if (v) return false;
      continue;
    }
    const std::size_t cb = blocks.find(sw.word.indices().without(n - 1));
    const Vector* canon = c.find(c.keys().encode(std::span<const std::size_t>(&cb, 1), sw.word[n - 1]));
    if (!v && !canon) continue;
    if (!v || !canon) return false;
    if (*v != sw.sign * *canon) return false;
  }
  return true;
}

TwoCochainTriple random_triple(Rng& rng, const DirectSumSpace& space, std::size_t arity) {
  TwoCochainTriple out(space, arity);
  for (const auto& u : shared_word_basis(space.v_dim, arity - 1)->words()) {
    for (std::size_t x = 0; x < space.g_dim; ++x) out.set_beta1(u, x, random_vector(rng, space.v_dim));
  }
  for (const auto& x : shared_word_basis(space.g_dim, arity - 1)->words()) {
    for (std::size_t v = 0; v < space.v_dim; ++v) out.set_beta2(x, v, random_vector(rng, space.v_dim));
  }
  for (const auto& x : shared_word_basis(space.g_dim, arity)->words()) out.set_beta3(x, random_vector(rng, space.v_dim));
  return out;
}

KeyClass key_class(const KeySpace& keys, std::uint64_t key, const DirectSumSpace& space) {
  std::size_t ids[2];
  std::size_t t = 0;
  keys.decode(key, std::span<std::size_t>(ids, 2), t);
  KeyClass k;
  for (auto i : keys.blocks().word(ids[0])) k.g_first += space.in_g(i) ? 1 : 0;
  for (auto i : keys.blocks().word(ids[1])) k.g_second += space.in_g(i) ? 1 : 0;
  k.tail_in_g = space.in_g(t);
  return k;
}

std::string describe(const KeyClass& k, std::size_t arity) {
  auto block = [&](std::size_t g) { return std::string(g, 'g') + std::string(arity - 1 - g, 'V'); };
  return "(" + block(k.g_first) + "," + block(k.g_second) + "," + (k.tail_in_g ? "g" : "V") + ")";
}

std::string describe_key(const KeySpace& keys, std::uint64_t key) {
  std::vector<std::size_t> ids(keys.degree());
  std::size_t t = 0;
  keys.decode(key, ids, t);
  std::string s = "(";
  for (auto b : ids) {
    for (auto i : keys.blocks().word(b)) s += std::to_string(i) + " ";
    s += "| ";
  }
  return s + std::to_string(t) + ")";
}

Cochain bracket_with_mu(const GeneralizedRepresentation& rep, const Cochain& alpha) {
  return graded_bracket(build_mu(rep).total, alpha);
}

Cochain one_cochain(const Matrix& alpha, const DirectSumSpace& space, std::size_t arity) {
  if (alpha.rows() != space.v_dim || alpha.cols() != space.g_dim) throw InputError("alpha must be dim V x dim g");
  Cochain out(space.dim(), space.dim(), arity, 0);
  for (std::size_t x = 0; x < space.g_dim; ++x) {
    Vector v(space.dim());
    for (std::size_t j = 0; j < space.v_dim; ++j) v[space.from_v(j)] = alpha(j, x);
    out.set(x, std::move(v));
  }
  return out;
}

Matrix one_cochain_matrix(const Cochain& c, const DirectSumSpace& space) {
  if (c.degree() != 0 || c.space_dim() != space.dim()) throw InputError("expected a degree-0 cochain on g (+) V");
  Matrix out(space.v_dim, space.g_dim);
  for (const auto& [key, value] : c.table()) {
    if (!space.in_g(key)) continue;
    for (std::size_t j = 0; j < space.v_dim; ++j) out(j, key) = value[space.from_v(j)];
  }
  return out;
}

}  // namespace nlie

namespace nlie {

namespace {

using Args = std::vector<Vector>;

Args with(Args a, const Vector& v) {
  a.push_back(v);
  return a;
}

Args cat(Args a, const Args& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Args slice(const Args& a, std::size_t from, std::size_t to) {
  return Args(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(to));
}

Args replace(Args a, std::size_t pos, const Vector& v) {
  a[pos] = v;
  return a;
}

Args drop(const Args& a, std::size_t pos) {
  Args out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r != pos) out.push_back(a[r]);
  }
  return out;
}

Scalar sg(std::size_t exponent) { return Scalar(parity_sign(exponent)); }

// Multilinear evaluation of pi, rho, theta and the beta components on
// vectors of W; every result is a vector of W.
class Context {
 public:
  Context(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta, Reading reading)
      : rep_(rep), beta_(beta), space_(beta.space()), n_(beta.arity()), reading_(reading) {}

  std::size_t n() const { return n_; }
  bool completed() const { return reading_ == Reading::completed; }

  Vector e(std::size_t i) const { return unit_vector(space_.dim(), i); }

  Vector br(const Args& a) const {
    Vector out(space_.dim());
    expand(a, [&](const SmallTuple& idx, const Scalar& c) {
      for (auto i : idx) {
        if (!space_.in_g(i)) return;
      }
      const Vector b = rep_.algebra().bracket_basis(idx);
      for (std::size_t k = 0; k < b.size(); ++k) out[k] += c * b[k];
    });
    return out;
  }

  Vector rho(const Args& g_args, const Vector& v) const {
    Vector out(space_.dim());
    expand(with(g_args, v), [&](const SmallTuple& idx, const Scalar& c) {
      const std::size_t last = idx.size() - 1;
      for (std::size_t r = 0; r < last; ++r) {
        if (!space_.in_g(idx[r])) return;
      }
      if (space_.in_g(idx[last])) return;
      const SignedWedge sw = normalize_tuple(idx.without(last));
      if (sw.sign == 0) return;
      const auto it = rep_.rho().table().find(sw.word);
      if (it == rep_.rho().table().end()) return;
      // column of rho(X) at the V basis vector, added into the V block
      const std::size_t col = idx[last] - space_.g_dim;
      for (std::size_t row = 0; row < space_.v_dim; ++row) {
        const Scalar& m = it->second(row, col);
        if (sgn(m) == 0) continue;
        if (sw.sign > 0) out[space_.from_v(row)] += c * m;
        else out[space_.from_v(row)] -= c * m;
      }
    });
    return out;
  }

  Vector theta(const Vector& x, const Args& v_args) const {
    Vector out(space_.dim());
    if (rep_.theta().empty()) return out;
    expand(cat(Args{x}, v_args), [&](const SmallTuple& idx, const Scalar& c) {
      if (!space_.in_g(idx[0])) return;
      SmallTuple vs;
      for (std::size_t r = 1; r < idx.size(); ++r) {
        if (space_.in_g(idx[r])) return;
        vs.push_back(idx[r] - space_.g_dim);
      }
      add_scaled(out, c, embed_v(space_, rep_.theta_basis(idx[0], vs)));
    });
    return out;
  }

  Vector beta(int component, const Args& a) const {
    Vector out(space_.dim());
    expand(a, [&](const SmallTuple& idx, const Scalar& c) {
      const SignedWedge sw = normalize_tuple(idx);
      if (sw.sign == 0) return;
      const Vector w = beta_.component_on_sorted(component, sw.word);
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (sgn(w[k]) == 0) continue;
        if (sw.sign > 0) out[space_.from_v(k)] += c * w[k];
        else out[space_.from_v(k)] -= c * w[k];
      }
    });
    return out;
  }

 private:
  template <class F>
  void expand(const Args& a, F&& f) const {
    std::vector<const Vector*> ptrs;
    for (const auto& v : a) {
      if (nlie::is_zero(v)) return;
      ptrs.push_back(&v);
    }
    expand_multilinear(std::span<const Vector* const>(ptrs), f);
  }

  const GeneralizedRepresentation& rep_;
  const TwoCochainTriple& beta_;
  DirectSumSpace space_;
  std::size_t n_;
  Reading reading_;
};

// Arguments of a degree-2 key as vectors of W.
struct Roles {
  Args b1;
  Args b2;
  Vector t;
};

Roles roles_of(const Context& c, const KeySpace& keys, std::uint64_t key) {
  std::size_t ids[2];
  std::size_t t = 0;
  keys.decode(key, std::span<std::size_t>(ids, 2), t);
  Roles r;
  for (auto i : keys.blocks().word(ids[0])) r.b1.push_back(c.e(i));
  for (auto i : keys.blocks().word(ids[1])) r.b2.push_back(c.e(i));
  r.t = c.e(t);
  return r;
}

using EquationFn = std::function<Vector(const Context&, const Roles&)>;

struct Equation {
  int component;
  Pattern pattern;
  EquationFn eval;
  // absent from the displayed list; needed for n = 3 only
  bool supplement = false;

  std::string name() const { return equation_name(component, pattern); }
};

// The printed identities. Argument names follow the displayed formulas:
// x, y are g arguments, u, h are V arguments; z is a g tail.
const std::vector<Equation>& equations() {
  static const std::vector<Equation> table = {
      {3, {Count::n_minus(1), Count::n_minus(1), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Args& y = r.b2;
         const Vector& z = r.t;
         Vector out(z.size());
         for (std::size_t s = 0; s < n - 1; ++s) {
           out = out - sg(n - (s + 1)) * c.rho(with(drop(y, s), z), c.beta(3, with(x, y[s])));
         }
         out = out + c.rho(x, c.beta(3, with(y, z)));
         out = out - c.rho(y, c.beta(3, with(x, z)));
         for (std::size_t s = 0; s < n - 1; ++s) out = out - c.beta(3, with(replace(y, s, c.br(with(x, y[s]))), z));
         out = out + c.beta(3, with(x, c.br(with(y, z))));
         out = out - c.beta(3, with(y, c.br(with(x, z))));
         return out;
       }},
      {3, {Count::n_minus(1), Count::fixed(2), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Vector& y1 = r.b2[0];
         const Vector& y2 = r.b2[1];
         const Args tail = with(slice(r.b2, 2, n - 1), r.t);  // h_3 .. h_n
         return -sg(n - 2) * c.theta(y2, cat(Args{c.beta(3, with(x, y1))}, tail)) -
                sg(n - 1) * c.theta(y1, cat(Args{c.beta(3, with(x, y2))}, tail));
       }},
      {3, {Count::fixed(1), Count::n_minus(1), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Vector& x1 = r.b1[0];
         const Args u = slice(r.b1, 1, n - 1);
         return sg(n - 1) * c.theta(x1, with(u, c.beta(3, with(r.b2, r.t))));
       }},
      {2, {Count::n_minus(1), Count::n_minus(1), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Args& y = r.b2;
         const Vector& h1 = r.t;
         Vector out = c.rho(x, c.beta(2, with(y, h1))) - c.rho(y, c.beta(2, with(x, h1)));
         for (std::size_t s = 0; s < n - 1; ++s) out = out - c.beta(2, with(replace(y, s, c.br(with(x, y[s]))), h1));
         out = out + c.beta(2, with(x, c.rho(y, h1)));
         out = out - c.beta(2, with(y, c.rho(x, h1)));
         return out;
       }},
      {2, {Count::n_minus(1), Count::n_minus(2), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Args ys = slice(r.b2, 0, n - 2);
         const Vector& h = r.b2[n - 2];
         const Vector& yn = r.t;
         Vector out = c.rho(with(ys, yn), c.beta(2, with(x, h)));
         out = out + c.rho(x, c.beta(2, cat(ys, {h, yn})));
         for (std::size_t s = 0; s < n - 2; ++s) {
           out = out - c.beta(2, cat(replace(ys, s, c.br(with(x, ys[s]))), {h, yn}));
         }
         out = out - c.beta(2, cat(ys, {c.rho(x, h), yn}));
         // printed with +; h sits in slot n-1 of [y_1, .., h, y_n], so rho_bar carries a minus
         out = out + (c.completed() ? -1 : 1) * c.beta(2, with(x, c.rho(with(ys, yn), h)));
         out = out - c.beta(2, cat(ys, {h, c.br(with(x, yn))}));
         return out;
       }},
      {2, {Count::n_minus(1), Count::fixed(1), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Vector& y1 = r.b2[0];
         const Args h = with(slice(r.b2, 1, n - 1), r.t);  // h_2 .. h_n
         Vector out(r.t.size());
         for (std::size_t s = 0; s + 1 < n - 1; ++s) {
           out = out - sg(n - 1) * c.theta(y1, replace(h, s, c.beta(2, with(x, h[s]))));
         }
         out = out - sg(n - 1) * c.theta(y1, replace(h, n - 2, c.beta(2, with(x, h[n - 2]))));
         out = out + sg(n - 1) * c.beta(2, with(x, c.theta(y1, h)));
         return out;
       }},
      {2, {Count::n_minus(2), Count::n_minus(1), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args xs = slice(r.b1, 0, n - 2);
         const Vector& u1 = r.b1[n - 2];
         const Args& y = r.b2;
         const Vector& z = r.t;
         Vector out(z.size());
         for (std::size_t s = 0; s < n - 1; ++s) {
           out = out - sg(n - (s + 1)) * c.rho(with(drop(y, s), z), c.beta(2, cat(xs, {u1, y[s]})));
         }
         out = out - c.rho(y, c.beta(2, cat(xs, {u1, z})));
         for (std::size_t s = 0; s < n - 1; ++s) {
           out = out + c.beta(2, with(replace(y, s, c.rho(with(xs, y[s]), u1)), z));
         }
         out = out + c.beta(2, cat(xs, {u1, c.br(with(y, z))}));
         out = out + c.beta(2, with(y, c.rho(with(xs, z), u1)));
         return out;
       }},
      {2, {Count::n_minus(2), Count::fixed(2), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args xs = slice(r.b1, 0, n - 2);
         const Vector& u1 = r.b1[n - 2];
         const Vector& y1 = r.b2[0];
         const Vector& y2 = r.b2[1];
         const Args tail = with(slice(r.b2, 2, n - 1), r.t);
         return -sg(n - 2) * c.theta(y2, cat(Args{c.beta(2, cat(xs, {u1, y1}))}, tail)) -
                sg(n - 1) * c.theta(y1, cat(Args{c.beta(2, cat(xs, {u1, y2}))}, tail));
       }},
      {2, {Count::fixed(1), Count::n_minus(1), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Vector& x1 = r.b1[0];
         const Args u = slice(r.b1, 1, n - 1);
         const Args& y = r.b2;
         const Vector& hn = r.t;
         return sg(n - 1) * c.theta(x1, with(u, c.beta(2, with(y, hn)))) -
                sg(n - 1) * c.beta(2, with(y, c.theta(x1, with(u, hn))));
       }},
      {2, {Count::fixed(1), Count::n_minus(2), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Vector& x1 = r.b1[0];
         const Args u = slice(r.b1, 1, n - 1);
         const Args ys = slice(r.b2, 0, n - 2);
         const Vector& h = r.b2[n - 2];
         const Vector& yn = r.t;
         Vector out = sg(n - 1) * c.theta(x1, with(u, c.beta(2, cat(ys, {h, yn})))) -
                      sg(n - 1) * c.beta(2, cat(ys, {c.theta(x1, with(u, h)), yn}));
         // for n = 3, beta(x_1, u, y) has a single V argument and feeds theta
         if (n == 3 && c.completed()) {
           out = out - sg(n - 1) * c.theta(ys[0], {h, c.beta(2, {x1, u[0], yn})});
           out = out + c.theta(yn, {h, c.beta(2, {x1, u[0], ys[0]})});
         }
         return out;
       }},
      {2, {Count::fixed(0), Count::n_minus(1), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& u = r.b1;
         const Args& y = r.b2;
         const Vector& yn = r.t;
         Vector out(yn.size());
         for (std::size_t s = 0; s < n - 1; ++s) out = out - c.beta(2, with(replace(y, s, c.theta(y[s], u)), yn));
         out = out - c.beta(2, with(y, c.theta(yn, u)));
         return out;
       }},
      {2, {Count::n_minus(1), Count::fixed(0), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Args& h = r.b2;
         const Vector& yn = r.t;
         Vector out(yn.size());
         for (std::size_t i = 0; i < n - 1; ++i) out = out - c.theta(yn, replace(h, i, c.beta(2, with(x, h[i]))));
         out = out + c.beta(2, with(x, c.theta(yn, h)));
         return out;
       }},
      {1, {Count::n_minus(1), Count::fixed(1), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Vector& y1 = r.b2[0];
         const Args h = with(slice(r.b2, 1, n - 1), r.t);  // h_2 .. h_n
         Vector out = c.rho(x, c.beta(1, cat(Args{y1}, h)));
         out = out - c.beta(1, cat(Args{c.br(with(x, y1))}, h));
         for (std::size_t s = 0; s + 1 < n - 1; ++s) out = out - c.beta(1, cat(Args{y1}, replace(h, s, c.rho(x, h[s]))));
         out = out - c.beta(1, cat(Args{y1}, replace(h, n - 2, c.rho(x, h[n - 2]))));
         return out;
       }},
      {1, {Count::n_minus(1), Count::fixed(0), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Args& h = r.b2;
         const Vector& yn = r.t;
         Vector out(yn.size());
         for (std::size_t i = 0; i < n - 1; ++i) out = out - c.theta(yn, replace(h, i, c.beta(1, with(x, h[i]))));
         out = out + c.rho(x, c.beta(1, with(h, yn)));
         for (std::size_t i = 0; i < n - 1; ++i) out = out - c.beta(1, with(replace(h, i, c.rho(x, h[i])), yn));
         out = out - c.beta(1, with(h, c.br(with(x, yn))));
         return out;
       }},
      {1, {Count::fixed(1), Count::n_minus(1), false},
       [](const Context& c, const Roles& r) {
         const Args& xu = r.b1;
         const Args& y = r.b2;
         const Vector& hn = r.t;
         Vector out = -c.rho(y, c.beta(1, with(xu, hn))) + c.beta(1, with(xu, c.rho(y, hn)));
         // for n = 3, [x_1, u_2, y_s] is a rho_bar value instead of zero
         if (c.n() == 3 && c.completed()) {
           for (std::size_t s = 0; s < 2; ++s) out = out + c.beta(1, with(replace(y, s, c.rho({xu[0], y[s]}, xu[1])), hn));
         }
         return out;
       }},
      {1, {Count::fixed(1), Count::fixed(1), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& xu = r.b1;
         const Vector& x1 = r.b1[0];
         const Args u = slice(r.b1, 1, n - 1);
         const Vector& y1 = r.b2[0];
         const Args h = with(slice(r.b2, 1, n - 1), r.t);  // h_2 .. h_n
         Vector out(r.t.size());
         for (std::size_t s = 0; s + 1 < n - 1; ++s) out = out - c.theta(y1, replace(h, s, c.beta(1, with(xu, h[s]))));
         out = out + sg(n - 1) * c.theta(x1, with(u, c.beta(1, cat(Args{y1}, h))));
         out = out - sg(n - 1) * c.theta(y1, replace(h, n - 2, c.beta(1, with(xu, h[n - 2]))));
         for (std::size_t s = 0; s + 1 < n - 1; ++s) {
           out = out - sg(n - 1) * c.beta(1, cat(Args{y1}, replace(h, s, c.theta(x1, with(u, h[s])))));
         }
         out = out + sg(n - 1) * c.beta(1, with(xu, c.theta(y1, h)));
         out = out - sg(n - 1) * c.beta(1, cat(Args{y1}, replace(h, n - 2, c.theta(x1, with(u, h[n - 2])))));
         return out;
       }},
      {1, {Count::fixed(1), Count::fixed(0), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& xu = r.b1;
         const Vector& x1 = r.b1[0];
         const Args u = slice(r.b1, 1, n - 1);
         const Args& h = r.b2;
         const Vector& yn = r.t;
         Vector out(yn.size());
         for (std::size_t i = 0; i < n - 1; ++i) out = out - c.theta(yn, replace(h, i, c.beta(1, with(xu, h[i]))));
         out = out + sg(n - 1) * c.theta(x1, with(u, c.beta(1, with(h, yn))));
         for (std::size_t i = 0; i < n - 1; ++i) {
           out = out - sg(n - 1) * c.beta(1, with(replace(h, i, c.theta(x1, with(u, h[i]))), yn));
         }
         out = out + c.beta(1, with(xu, c.theta(yn, h)));
         return out;
       }},
      {1, {Count::fixed(0), Count::n_minus(1), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& u = r.b1;
         const Args& y = r.b2;
         const Vector& z = r.t;
         Vector out(z.size());
         for (std::size_t s = 0; s < n - 1; ++s) {
           out = out - sg(n - (s + 1)) * c.rho(with(drop(y, s), z), c.beta(1, with(u, y[s])));
         }
         out = out - c.rho(y, c.beta(1, with(u, z)));
         out = out + c.beta(1, with(u, c.br(with(y, z))));
         return out;
       }},
      {1, {Count::fixed(0), Count::fixed(2), false},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& u = r.b1;
         const Vector& y1 = r.b2[0];
         const Vector& y2 = r.b2[1];
         const Args tail = with(slice(r.b2, 2, n - 1), r.t);  // h_3 .. h_n
         Vector out = -sg(n - 2) * c.theta(y2, cat(Args{c.beta(1, with(u, y1))}, tail));
         out = out - sg(n - 1) * c.theta(y1, cat(Args{c.beta(1, with(u, y2))}, tail));
         out = out - c.beta(1, cat(Args{c.theta(y1, u), y2}, tail));
         out = out - c.beta(1, cat(Args{y1, c.theta(y2, u)}, tail));
         return out;
       }},
      {1, {Count::fixed(0), Count::fixed(1), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& u = r.b1;
         const Vector& y1 = r.b2[0];
         const Args h = slice(r.b2, 1, n - 1);  // h_2 .. h_{n-1}
         const Vector& yn = r.t;
         Vector out = -c.theta(yn, cat(Args{c.beta(1, with(u, y1))}, h));
         out = out - sg(n - 1) * c.theta(y1, with(h, c.beta(1, with(u, yn))));
         out = out - c.beta(1, cat(Args{c.theta(y1, u)}, with(h, yn)));
         out = out - c.beta(1, cat(Args{y1}, with(h, c.theta(yn, u))));
         return out;
       }},
      // n = 3: theta meets beta3 on the class of the beta2 identity with a g tail
      {3, {Count::n_minus(1), Count::n_minus(2), true},
       [](const Context& c, const Roles& r) {
         const std::size_t n = c.n();
         const Args& x = r.b1;
         const Vector& y1 = r.b2[0];
         const Vector& h = r.b2[1];
         const Vector& yn = r.t;
         return -sg(n - 1) * c.theta(y1, {h, c.beta(3, with(x, yn))}) + c.theta(yn, {h, c.beta(3, with(x, y1))});
       },
       true},
      // n = 3: beta1 on one mixed block each and a g tail
      {1, {Count::fixed(1), Count::fixed(1), true},
       [](const Context& c, const Roles& r) {
         const Vector& x1 = r.b1[0];
         const Vector& u = r.b1[1];
         const Vector& y1 = r.b2[0];
         const Vector& h = r.b2[1];
         const Vector& yn = r.t;
         Vector out = c.beta(1, {c.rho({x1, y1}, u), h, yn});
         out = out - c.beta(1, {x1, u, c.rho({y1, yn}, h)});
         out = out + c.beta(1, {y1, h, c.rho({x1, yn}, u)});
         out = out + c.rho({y1, yn}, c.beta(1, {x1, u, h}));
         return out;
       },
       true},
  };
  return table;
}

std::vector<const Equation*> active_equations(std::size_t n, Reading reading) {
  std::vector<const Equation*> out;
  for (const auto& e : equations()) {
    if (e.supplement && (n != 3 || reading != Reading::completed)) continue;
    out.push_back(&e);
  }
  return out;
}

const Equation& find_equation(const std::string& name, std::size_t n, Reading reading) {
  for (const Equation* e : active_equations(n, reading)) {
    if (e->name() == name) return *e;
  }
  throw InputError("unknown identity " + name);
}

Scalar max_abs_of(const Vector& v) {
  Scalar m = 0;
  for (const auto& x : v) m = std::max(m, Scalar(abs(x)));
  return m;
}

// Keys of the degree-2 key space grouped by class.
std::map<KeyClass, std::vector<std::uint64_t>> keys_by_class(const KeySpace& keys, const DirectSumSpace& space) {
  std::map<KeyClass, std::vector<std::uint64_t>> out;
  for (std::uint64_t k = 0; k < keys.size(); ++k) out[key_class(keys, k, space)].push_back(k);
  return out;
}

void check_shapes(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta) {
  if (!(direct_sum(rep) == beta.space()) || rep.algebra().arity() != beta.arity()) {
    throw InputError("cochain triple does not match the representation");
  }
}

}  // namespace

std::string Count::str() const { return relative ? "n-" + std::to_string(k) : std::to_string(k); }

KeyClass Pattern::at(std::size_t n) const { return {first.at(n), second.at(n), tail_in_g}; }

std::string Pattern::str() const { return first.str() + "," + second.str() + "," + (tail_in_g ? "g" : "V"); }

std::string equation_name(int component, const Pattern& pattern) {
  return "b" + std::to_string(component) + "[" + pattern.str() + "]";
}

std::vector<EquationInfo> equation_table(std::size_t arity, Reading reading) {
  std::vector<EquationInfo> out;
  for (const Equation* e : active_equations(arity, reading)) {
    out.push_back({e->name(), e->component, e->pattern, e->pattern.at(arity), e->supplement});
  }
  return out;
}

Vector evaluate_equation(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta, const std::string& name,
                         std::uint64_t key, Reading reading) {
  check_shapes(rep, beta);
  const Context c(rep, beta, reading);
  const KeySpace keys(beta.space().dim(), beta.arity(), 2);
  const Equation& eq = find_equation(name, beta.arity(), reading);
  if (!(key_class(keys, key, beta.space()) == eq.pattern.at(beta.arity()))) {
    throw InputError("key does not belong to the identity's argument pattern");
  }
  return v_part(beta.space(), eq.eval(c, roles_of(c, keys, key)));
}

ResidualReport two_cocycle_residuals(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta,
                                     Reading reading) {
  check_shapes(rep, beta);
  const Context c(rep, beta, reading);
  const KeySpace keys(beta.space().dim(), beta.arity(), 2);
  const SignTable& signs = frozen_sign_table();
  std::map<KeyClass, std::vector<const Equation*>> by_class;
  for (const Equation* eq : active_equations(beta.arity(), reading)) by_class[eq->pattern.at(beta.arity())].push_back(eq);

  // Equations sharing a key class (n = 3 only) are summed: only the total
  // of d over all beta components has to vanish there.
  ResidualReport report;
  for (const auto& [pattern, keys_of_class] : keys_by_class(keys, beta.space())) {
    auto it = by_class.find(pattern);
    if (it == by_class.end()) continue;
    std::vector<std::string> ids;
    for (const Equation* eq : it->second) ids.push_back(eq->name());
    for (auto key : keys_of_class) {
      const Roles roles = roles_of(c, keys, key);
      Vector v(beta.space().v_dim);
      for (const Equation* eq : it->second) {
        auto s = signs.find(eq->name());
        add_scaled(v, s == signs.end() || s->second == 0 ? 1 : s->second, v_part(beta.space(), eq->eval(c, roles)));
      }
      if (is_zero(v)) continue;
      report.max_abs = std::max(report.max_abs, max_abs_of(v));
      report.residuals.push_back({ids, key, describe_key(keys, key), std::move(v)});
    }
  }
  std::sort(report.residuals.begin(), report.residuals.end(),
            [](const Residual& a, const Residual& b) { return a.key < b.key; });
  return report;
}

ResidualReport one_cocycle_residual(const GeneralizedRepresentation& rep, const Matrix& alpha) {
  const NLieAlgebra& g = rep.algebra();
  const std::size_t n = g.arity();
  if (alpha.rows() != rep.dim_v() || alpha.cols() != g.dim()) throw InputError("alpha must be dim V x dim g");
  auto col = [&](std::size_t x) {
    Vector v(rep.dim_v());
    for (std::size_t j = 0; j < rep.dim_v(); ++j) v[j] = alpha(j, x);
    return v;
  };
  const KeySpace keys(g.dim(), n, 1);
  ResidualReport report;
  for (const auto& w : shared_word_basis(g.dim(), n)->words()) {
    const SmallTuple xs = w.indices();
    const SmallTuple head = xs.without(n - 1);
    Vector v = -alpha.apply(g.bracket_basis(xs));
    v = v + rep.rho().act(head, col(xs[n - 1]));
    for (std::size_t i = 0; i < n - 1; ++i) {
      v = v + sg(n - (i + 1)) * rep.rho().act(xs.without(i), col(xs[i]));
    }
    if (is_zero(v)) continue;
    const std::size_t b = keys.blocks().find(head);
    const std::uint64_t key = keys.encode(std::span<const std::size_t>(&b, 1), xs[n - 1]);
    report.max_abs = std::max(report.max_abs, max_abs_of(v));
    report.residuals.push_back({{}, key, describe_key(keys, key), std::move(v)});
  }
  return report;
}

bool EquationComparison::all_match() const {
  return std::all_of(groups.begin(), groups.end(), [](const EquationGroup& g) { return g.matches; });
}

namespace {

struct GroupData {
  EquationGroup group;
  std::vector<std::uint64_t> keys;
  // values[e][k]: equation e on key k; target[k]: d(beta_c) on key k
  std::vector<std::vector<Vector>> values;
  std::vector<Vector> target;
};

struct ComparisonData {
  std::vector<GroupData> groups;
  std::vector<ComponentCoverage> uncovered;
};

ComparisonData collect(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta, Reading reading) {
  check_shapes(rep, beta);
  const DirectSumSpace& space = beta.space();
  const std::size_t n = beta.arity();
  const Context c(rep, beta, reading);
  const KeySpace keys(space.dim(), n, 2);
  const auto classes = keys_by_class(keys, space);
  const MuElement mu = build_mu(rep);
  Cochain d[4] = {Cochain(space.dim(), space.dim(), n, 2), Cochain(space.dim(), space.dim(), n, 2),
                  Cochain(space.dim(), space.dim(), n, 2), Cochain(space.dim(), space.dim(), n, 2)};
  for (int comp = 1; comp <= 3; ++comp) d[comp] = graded_bracket(mu.total, to_cochain(beta, comp));

  ComparisonData out;
  std::map<std::pair<int, KeyClass>, std::size_t> index;
  for (const Equation* e : active_equations(n, reading)) {
    const Equation& eq = *e;
    const KeyClass pattern = eq.pattern.at(n);
    auto [it, inserted] = index.try_emplace({eq.component, pattern}, out.groups.size());
    if (inserted) {
      GroupData g;
      g.group.component = eq.component;
      g.group.pattern = pattern;
      auto cit = classes.find(pattern);
      if (cit != classes.end()) g.keys = cit->second;
      for (auto key : g.keys) {
        const Vector* v = d[eq.component].find(key);
        g.target.push_back(v ? v_part(space, *v) : Vector(space.v_dim));
      }
      out.groups.push_back(std::move(g));
    }
    GroupData& g = out.groups[it->second];
    g.group.equations.push_back(eq.name());
    std::vector<Vector> vals;
    for (auto key : g.keys) vals.push_back(v_part(space, eq.eval(c, roles_of(c, keys, key))));
    g.values.push_back(std::move(vals));
  }

  for (int comp = 1; comp <= 3; ++comp) {
    std::map<KeyClass, std::size_t> counts;
    for (const auto& [key, value] : d[comp].table()) {
      const KeyClass k = key_class(keys, key, space);
      if (!index.contains({comp, k})) ++counts[k];
    }
    for (const auto& [k, count] : counts) out.uncovered.push_back({comp, k, count});
  }
  return out;
}

// Keys where sum_e signs[e] * values[e] != target.
std::vector<std::uint64_t> mismatches(const GroupData& g, const std::vector<int>& signs, bool stop_early) {
  std::vector<std::uint64_t> bad;
  for (std::size_t k = 0; k < g.keys.size(); ++k) {
    Vector sum(g.target[k].size());
    for (std::size_t e = 0; e < g.values.size(); ++e) add_scaled(sum, signs[e], g.values[e][k]);
    if (sum != g.target[k]) {
      bad.push_back(g.keys[k]);
      if (stop_early) break;
    }
  }
  return bad;
}

}  // namespace

EquationComparison compare_equations(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta,
                                     const SignTable& signs, Reading reading) {
  ComparisonData data = collect(rep, beta, reading);
  EquationComparison out;
  for (auto& g : data.groups) {
    std::vector<int> s;
    bool known = true;
    for (const auto& name : g.group.equations) {
      auto it = signs.find(name);
      const int sign = it == signs.end() ? 0 : it->second;
      known = known && sign != 0;
      s.push_back(sign);
    }
    g.group.mismatched_keys = mismatches(g, s, false);
    g.group.matches = known && g.group.mismatched_keys.empty();
    out.groups.push_back(std::move(g.group));
  }
  out.uncovered = std::move(data.uncovered);
  return out;
}

SignTable derive_sign_table(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta,
                            Reading reading) {
  const ComparisonData data = collect(rep, beta, reading);
  SignTable out;
  for (const auto& g : data.groups) {
    const std::size_t k = g.group.equations.size();
    bool found = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k) && !found; ++mask) {
      std::vector<int> s(k);
      for (std::size_t e = 0; e < k; ++e) s[e] = (mask >> e) & 1 ? -1 : 1;
      if (mismatches(g, s, true).empty()) {
        found = true;
        for (std::size_t e = 0; e < k; ++e) out[g.group.equations[e]] = s[e];
      }
    }
    if (!found) {
      for (const auto& name : g.group.equations) out[name] = 0;
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxListed = 50;

}  // namespace

CrosscheckResult crosscheck_two_cocycle(const GeneralizedRepresentation& rep, const TwoCochainTriple& beta,
                                        Reading reading) {
  check_shapes(rep, beta);
  const DirectSumSpace& space = beta.space();
  const std::size_t n = beta.arity();
  const KeySpace keys(space.dim(), n, 2);
  const ResidualReport battery = two_cocycle_residuals(rep, beta, reading);
  const Cochain d = bracket_with_mu(rep, to_cochain(beta));

  std::set<KeyClass> covered;
  for (const auto& e : equation_table(n, reading)) covered.insert(e.key_class);
  std::set<std::uint64_t> battery_keys;
  for (const auto& r : battery.residuals) battery_keys.insert(r.key);

  CrosscheckResult out;
  out.battery_empty = battery.empty();
  out.d_zero = d.is_zero();
  std::set<std::uint64_t> d_keys;
  for (const auto& [key, value] : d.table()) {
    if (covered.contains(key_class(keys, key, space))) {
      out.d_zero_on_support = false;
      d_keys.insert(key);
      continue;
    }
    ++out.outside_support_count;
    if (out.outside_support.size() < kMaxListed) {
      out.outside_support.push_back(describe_key(keys, key) + " " + describe(key_class(keys, key, space), n));
    }
  }
  std::vector<std::uint64_t> one_sided;
  std::set_symmetric_difference(battery_keys.begin(), battery_keys.end(), d_keys.begin(), d_keys.end(),
                                std::back_inserter(one_sided));
  for (auto key : one_sided) {
    if (out.discrepancies.size() >= kMaxListed) break;
    out.discrepancies.push_back(describe_key(keys, key) + (battery_keys.contains(key) ? " battery" : " d"));
  }
  out.agree = out.battery_empty == out.d_zero_on_support;
  return out;
}

CrosscheckResult crosscheck_one_cocycle(const GeneralizedRepresentation& rep, const Matrix& alpha) {
  const DirectSumSpace space = direct_sum(rep);
  const std::size_t n = rep.algebra().arity();
  const ResidualReport battery = one_cocycle_residual(rep, alpha);
  const Cochain d = bracket_with_mu(rep, one_cochain(alpha, space, n));
  const KeySpace& keys = d.keys();

  CrosscheckResult out;
  out.battery_empty = battery.empty();
  out.d_zero = d.is_zero();
  std::set<std::uint64_t> battery_keys;
  for (const auto& r : battery.residuals) battery_keys.insert(r.key);
  std::set<std::uint64_t> d_keys;
  std::size_t b = 0;
  std::size_t t = 0;
  for (const auto& [key, value] : d.table()) {
    keys.decode(key, std::span<std::size_t>(&b, 1), t);
    const WedgeWord& w = keys.blocks().word(b);
    const bool pure_g = space.in_g(t) && space.in_g(w[w.size() - 1]);
    if (!pure_g) {
      ++out.outside_support_count;
      if (out.outside_support.size() < kMaxListed) out.outside_support.push_back(describe_key(keys, key));
      continue;
    }
    out.d_zero_on_support = false;
    // the battery runs over increasing tuples only
    if (t > w[w.size() - 1]) d_keys.insert(key);
  }
  // battery keys are encoded over g; re-encode the d keys the same way
  const KeySpace g_keys(space.g_dim, n, 1);
  std::set<std::uint64_t> d_keys_g;
  for (auto key : d_keys) {
    keys.decode(key, std::span<std::size_t>(&b, 1), t);
    const std::size_t gb = g_keys.blocks().find(keys.blocks().word(b).indices());
    d_keys_g.insert(g_keys.encode(std::span<const std::size_t>(&gb, 1), t));
  }
  std::vector<std::uint64_t> one_sided;
  std::set_symmetric_difference(battery_keys.begin(), battery_keys.end(), d_keys_g.begin(), d_keys_g.end(),
                                std::back_inserter(one_sided));
  for (auto key : one_sided) {
    if (out.discrepancies.size() >= kMaxListed) break;
    out.discrepancies.push_back(describe_key(g_keys, key) + (battery_keys.contains(key) ? " battery" : " d"));
  }
  out.agree = out.battery_empty == out.d_zero_on_support;
  return out;
}

const SignTable& frozen_sign_table() {
  static const SignTable table = {
      {"b3[n-1,n-1,g]", 1}, {"b3[n-1,2,V]", 1},   {"b3[1,n-1,g]", 1},   {"b3[n-1,n-2,g]", 1},
      {"b2[n-1,n-1,V]", 1}, {"b2[n-1,n-2,g]", 1}, {"b2[n-1,1,V]", 1},   {"b2[n-2,n-1,g]", 1},
      {"b2[n-2,2,V]", 1},   {"b2[1,n-1,V]", 1},   {"b2[1,n-2,g]", 1},   {"b2[0,n-1,g]", 1},
      {"b2[n-1,0,g]", 1},   {"b1[n-1,1,V]", 1},   {"b1[n-1,0,g]", 1},   {"b1[1,n-1,V]", 1},
      {"b1[1,1,V]", 1},     {"b1[1,0,g]", 1},     {"b1[0,n-1,g]", 1},   {"b1[0,2,V]", 1},
      {"b1[0,1,g]", 1},     {"b1[1,1,g]", 1},
  };
  return table;
}

}  // namespace nlie

namespace nlie {

std::string to_string(Reading r) { return r == Reading::printed ? "printed" : "completed"; }

}  // namespace nlie

namespace nlie {

std::vector<std::string> one_cocycle_mismatches(const GeneralizedRepresentation& rep, const Matrix& alpha) {
  const DirectSumSpace space = direct_sum(rep);
  const std::size_t n = rep.algebra().arity();
  const ResidualReport battery = one_cocycle_residual(rep, alpha);
  const Cochain d = bracket_with_mu(rep, one_cochain(alpha, space, n));
  const KeySpace g_keys(space.g_dim, n, 1);
  std::map<std::uint64_t, Vector> residual;
  for (const auto& r : battery.residuals) residual[r.key] = r.value;

  std::vector<std::string> out;
  for (const auto& w : shared_word_basis(space.g_dim, n)->words()) {
    const SmallTuple xs = w.indices();
    const std::size_t gb = g_keys.blocks().find(xs.without(n - 1));
    const std::uint64_t gk = g_keys.encode(std::span<const std::size_t>(&gb, 1), xs[n - 1]);
    const std::size_t wb = d.keys().blocks().find(xs.without(n - 1));
    const Vector* dv = d.find(d.keys().encode(std::span<const std::size_t>(&wb, 1), xs[n - 1]));
    const Vector lhs = residual.contains(gk) ? residual[gk] : Vector(space.v_dim);
    const Vector rhs = dv ? v_part(space, *dv) : Vector(space.v_dim);
    if (lhs != rhs) out.push_back(describe_key(g_keys, gk));
  }
  return out;
}

}  // namespace nlie
