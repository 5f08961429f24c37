#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nlie/complex.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

enum class ComplexKind { generalized, classical };

std::string to_string(ComplexKind kind);

/// Coordinates on a cochain space: either all of C^p(g, V), or the
/// restricted space C^p_> (keys with at least one g argument, V-valued, on
/// W-valued cochains). Coordinate index = position of key * dim V + coordinate.
class CochainBasis {
 public:
  static CochainBasis classical(std::size_t g_dim, std::size_t v_dim, std::size_t arity, std::size_t degree);
  static CochainBasis restricted(const DirectSumSpace& space, std::size_t arity, std::size_t degree);

  ComplexKind kind() const { return kind_; }
  std::size_t degree() const { return keys_.degree(); }
  std::uint64_t size() const { return static_cast<std::uint64_t>(support_.size()) * coords_; }
  std::size_t key_count() const { return support_.size(); }
  const KeySpace& keys() const { return keys_; }

  Cochain zero() const;
  Cochain unit(std::uint64_t j) const;
  /// Throws ConsistencyError if `c` has a component outside this space.
  SparseColumn coordinates(const Cochain& c) const;
  Cochain from_coordinates(const SparseColumn& x) const;

 private:
  CochainBasis(ComplexKind kind, KeySpace keys, std::size_t value_dim, std::size_t coords, std::size_t offset);

  ComplexKind kind_;
  KeySpace keys_;
  std::size_t value_dim_;
  std::size_t coords_;
  std::size_t offset_;
  std::vector<std::uint64_t> support_;  // sorted key indices; empty means "all keys"
  bool all_keys_ = false;
};

using CochainOperator = std::function<Cochain(const Cochain&)>;

/// Column j = coordinates of op(source.unit(j)) in `target`. Columns are
/// computed in parallel; the result does not depend on the thread count.
SparseMatrix assemble_matrix(const CochainOperator& op, const CochainBasis& source, const CochainBasis& target);

struct DegreeRecord {
  std::size_t degree = 0;        // number of (n-1)-blocks
  std::uint64_t dim_c = 0;
  std::size_t rank_d = 0;        // rank of d_p : C^p -> C^{p+1}
  std::uint64_t dim_z = 0;       // dim C^p - rank d_p
  std::size_t dim_b = 0;         // rank d_{p-1}
  std::int64_t dim_h = 0;
  std::vector<std::size_t> pivot_columns;
  bool image_in_kernel = true;   // d_p d_{p-1} = 0 checked on every column
};

struct CohomologyReport {
  ComplexKind kind = ComplexKind::generalized;
  std::size_t arity = 0;
  std::size_t g_dim = 0;
  std::size_t v_dim = 0;
  std::size_t max_degree = 0;
  std::vector<DegreeRecord> degrees;

  bool inclusions_hold() const;
};

inline constexpr std::size_t kMaxCohomologyDegree = 3;

/// Per-degree dimensions for p = 0..max_degree. Refuses invalid inputs with
/// InputError (FI or representation failure, or [mu, mu] != 0).
CohomologyReport cohomology_report(const GeneralizedRepresentation& rep, ComplexKind kind, std::size_t max_degree);

}  // namespace nlie
