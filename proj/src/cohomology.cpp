#include "nlie/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace nlie {

std::string to_string(ComplexKind kind) { return kind == ComplexKind::classical ? "classical" : "new"; }

CochainBasis::CochainBasis(ComplexKind kind, KeySpace keys, std::size_t value_dim, std::size_t coords,
                           std::size_t offset)
    : kind_(kind), keys_(std::move(keys)), value_dim_(value_dim), coords_(coords), offset_(offset) {}

CochainBasis CochainBasis::classical(std::size_t g_dim, std::size_t v_dim, std::size_t arity, std::size_t degree) {
  CochainBasis b(ComplexKind::classical, KeySpace(g_dim, arity, degree), v_dim, v_dim, 0);
  b.all_keys_ = true;
  b.support_.resize(b.keys_.size());
  for (std::uint64_t k = 0; k < b.keys_.size(); ++k) b.support_[k] = k;
  return b;
}

CochainBasis CochainBasis::restricted(const DirectSumSpace& space, std::size_t arity, std::size_t degree) {
  CochainBasis b(ComplexKind::generalized, KeySpace(space.dim(), arity, degree), space.dim(), space.v_dim,
                 space.g_dim);
  for (std::uint64_t k = 0; k < b.keys_.size(); ++k) {
    if (!all_v_key(b.keys_, k, space)) b.support_.push_back(k);
  }
  return b;
}

Cochain CochainBasis::zero() const {
  return Cochain(keys_.space_dim(), value_dim_, keys_.arity(), keys_.degree());
}

Cochain CochainBasis::unit(std::uint64_t j) const {
  if (j >= size()) throw InputError("basis index out of range");
  Cochain c = zero();
  c.set(support_[j / coords_], unit_vector(value_dim_, offset_ + j % coords_));
  return c;
}

SparseColumn CochainBasis::coordinates(const Cochain& c) const {
  if (c.space_dim() != keys_.space_dim() || c.value_dim() != value_dim_ || c.degree() != degree() ||
      c.arity() != keys_.arity()) {
    throw InputError("cochain does not belong to this cochain space");
  }
  SparseColumn out;
  for (const auto& [key, value] : c.table()) {
    std::uint64_t pos = key;
    if (!all_keys_) {
      auto it = std::lower_bound(support_.begin(), support_.end(), key);
      if (it == support_.end() || *it != key) throw ConsistencyError("cochain is nonzero on an all-V key");
      pos = static_cast<std::uint64_t>(it - support_.begin());
    }
    for (std::size_t t = 0; t < value_dim_; ++t) {
      if (sgn(value[t]) == 0) continue;
      if (t < offset_ || t >= offset_ + coords_) throw ConsistencyError("cochain has a value outside V");
      out.emplace_back(pos * coords_ + (t - offset_), value[t]);
    }
  }
  // keys are visited in increasing order, so `out` is sorted
  return out;
}

Cochain CochainBasis::from_coordinates(const SparseColumn& x) const {
  Cochain c = zero();
  for (const auto& [j, v] : x) {
    if (j >= size()) throw InputError("coordinate out of range");
    c.add(support_[j / coords_], v, unit_vector(value_dim_, offset_ + j % coords_));
  }
  return c;
}

SparseMatrix assemble_matrix(const CochainOperator& op, const CochainBasis& source, const CochainBasis& target) {
  SparseMatrix m;
  m.rows = target.size();
  m.columns.resize(source.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), source.size() / 64 + 1));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (std::uint64_t j = next++; j < source.size(); j = next++) {
        m.columns[j] = target.coordinates(op(source.unit(j)));
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = source.size();
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return m;
}

bool CohomologyReport::inclusions_hold() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeRecord& r) { return r.image_in_kernel; });
}

namespace {

bool product_vanishes(const SparseMatrix& outer, const SparseMatrix& inner) {
  for (const auto& col : inner.columns) {
    if (!outer.apply(col).empty()) return false;
  }
  return true;
}

}  // namespace

CohomologyReport cohomology_report(const GeneralizedRepresentation& rep, ComplexKind kind, std::size_t max_degree) {
  if (max_degree > kMaxCohomologyDegree) throw InputError("max degree exceeds the supported cap of 3");
  const NLieAlgebra& g = rep.algebra();
  if (!check_fundamental_identity(g).empty()) throw InputError("algebra violates the fundamental identity");
  if (!check_representation(rep.rho()).empty()) throw InputError("rho is not a representation");

  CohomologyReport report;
  report.kind = kind;
  report.arity = g.arity();
  report.g_dim = g.dim();
  report.v_dim = rep.dim_v();
  report.max_degree = max_degree;

  const std::size_t n = g.arity();
  std::vector<CochainBasis> bases;
  CochainOperator op;
  std::optional<NewComplex> complex;
  if (kind == ComplexKind::classical) {
    for (std::size_t p = 0; p <= max_degree + 1; ++p) bases.push_back(CochainBasis::classical(g.dim(), rep.dim_v(), n, p));
    op = [&rep](const Cochain& a) { return delta_rho(rep.rho(), a); };
  } else {
    complex.emplace(rep);
    for (std::size_t p = 0; p <= max_degree + 1; ++p) bases.push_back(CochainBasis::restricted(complex->space(), n, p));
    op = [&complex](const Cochain& a) { return complex->apply(a); };
  }

  SparseMatrix previous;
  for (std::size_t p = 0; p <= max_degree; ++p) {
    SparseMatrix current = assemble_matrix(op, bases[p], bases[p + 1]);
    const RankResult r = rank_and_kernel(current, false);
    DegreeRecord rec;
    rec.degree = p;
    rec.dim_c = bases[p].size();
    rec.rank_d = r.rank;
    rec.dim_z = rec.dim_c - r.rank;
    rec.dim_b = p == 0 ? 0 : report.degrees.back().rank_d;
    rec.dim_h = static_cast<std::int64_t>(rec.dim_z) - static_cast<std::int64_t>(rec.dim_b);
    rec.pivot_columns = r.pivot_columns;
    rec.image_in_kernel = p == 0 || product_vanishes(current, previous);
    report.degrees.push_back(std::move(rec));
    previous = std::move(current);
  }
  return report;
}

}  // namespace nlie
